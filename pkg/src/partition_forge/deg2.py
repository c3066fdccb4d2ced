"""Degree-two machinery: flat splitting and merging, the parity embedding of
mixed partitions into secondary regular ones, ground stripping, and the
count-level verification across all six degree-two families.

The chain runs F2 -> F1 -> R1 -> O -> E -> R2.  Every arrow except O -> E is
an explicit bijection here; that one link is verified by exhaustive counting
(the underlying algorithm belongs to a companion construction and is out of
scope), so the composite is bijective except where documented.
"""

from __future__ import annotations

from .core import (
    InvalidPartitionError,
    Primary,
    Secondary,
    ground_delta,
    lower_half,
    secondary_size,
    upper_half,
)
from .families import count_by_word, validate_member


def split_flat2(pi, energy, colors):
    """Split each secondary part of a flat partition into its two halves."""
    validate_member("F2", pi, energy, colors)
    g = colors.ground
    if len(pi) == 1:
        return (Primary(0, g),)
    parts = []
    for p in pi[:-2]:
        parts.append(upper_half(p, energy))
        parts.append(lower_half(p))
    last = pi[-2]
    parts.append(upper_half(last, energy))
    if last.right != g:
        parts.append(lower_half(last))
    parts.append(Primary(0, g))
    out = tuple(parts)
    validate_member("F1", out, energy, colors)
    return out


def merge_flat1(pi, energy, colors):
    """Pair consecutive primary parts into secondary ones, padding an odd tail."""
    validate_member("F1", pi, energy, colors)
    g = colors.ground
    body = list(pi[:-1])
    if not body:
        return (Secondary(0, g, g),)
    if len(body) % 2:
        body.append(Primary(0, g))
    parts = []
    for i in range(0, len(body), 2):
        hi, lo = body[i], body[i + 1]
        parts.append(Secondary(lo.size, hi.color, lo.color))
    out = tuple(parts) + (Secondary(0, g, g),)
    validate_member("F2", out, energy, colors)
    return out


def embed_part(p, energy, colors):
    """Size-preserving embedding of one mixed part into the secondary parts.

    A primary part picks up the ground color on the side dictated by its
    size parity; a secondary part over the non-ground colors passes through
    unchanged.
    """
    g = colors.ground
    if isinstance(p, Secondary):
        if g in (p.left, p.right):
            raise InvalidPartitionError("secondary part %r already carries the ground" % (p,))
        return p
    rho = 1 - ground_delta(energy, colors)
    if p.size % 2 == rho % 2:
        return Secondary((p.size - rho) // 2, p.color, g)
    return Secondary((p.size - (1 - rho)) // 2, g, p.color)


def rmap(pi, energy, colors):
    """Embed a mixed partition into the secondary regular family.

    Applies the part embedding throughout and appends the terminal ground
    pair.
    """
    validate_member("E+", pi, energy, colors)
    g = colors.ground
    result = tuple(embed_part(p, energy, colors) for p in pi) + (Secondary(0, g, g),)
    validate_member("R2", result, energy, colors)
    return result


def rmap_inv(pi, energy, colors):
    """Strip the ground color back off the secondary parts that carry it."""
    ground_delta(energy, colors)
    validate_member("R2", pi, energy, colors)
    g = colors.ground
    out = []
    for p in pi[:-1]:
        if p.left != g and p.right != g:
            out.append(p)
        elif p.right == g:
            out.append(Primary(secondary_size(p, energy), p.left))
        else:
            out.append(Primary(secondary_size(p, energy), p.right))
    result = tuple(out)
    validate_member("E+", result, energy, colors)
    return result


def strip_ground(pi, energy, colors):
    """Drop the terminal ground part of a regular partition."""
    validate_member("R1", pi, energy, colors)
    out = pi[:-1]
    validate_member("O+", out, energy, colors)
    return out


def add_ground(pi, energy, colors):
    """Append the terminal ground part to a partition on the upper half line."""
    validate_member("O+", pi, energy, colors)
    out = pi + (Primary(0, colors.ground),)
    validate_member("R1", out, energy, colors)
    return out


def verify_flatreg2(energy, colors, word, n):
    """Count all six degree-two families at one (word, size) cell."""
    word = tuple(word)
    tags = (("F2", "F2"), ("F1", "F1"), ("R1", "R1"), ("O", "O+"), ("E", "E+"), ("R2", "R2"))
    counts = {}
    for label, tag in tags:
        counts[label] = count_by_word(tag, energy, colors, word, n)
    return {
        "word": word,
        "n": n,
        "counts": counts,
        "all_equal": len(set(counts.values())) == 1,
    }
