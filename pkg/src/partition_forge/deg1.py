"""The degree-one bijection between flat and regular grounded partitions.

A regular partition splits uniquely into the minimal flat-and-regular
skeleton sharing its color word plus a classical residual partition.  The
forward map reads the ground-colored parts of a flat partition off as
columns of that residual: each run of inserted ground parts becomes a batch
of equal column heights, with one weighted column per descent position that
received an insertion.  The inverse recovers the insertions by comparing
the staircase ``delta_g + |mu_k| + k`` against ``nu'_u - u - 1``.

Both maps validate their input first (they are only defined on the stated
families); the validation is inlined because these run over millions of
enumerated members in the acceptance sweeps.
"""

from __future__ import annotations

from bisect import bisect_left

from .core import InvalidPartitionError, Primary, UsageError, ground_delta


def conjugate(lam):
    """Conjugate (Young-diagram transpose) of a classical partition."""
    lam = tuple(lam)
    for a, b in zip(lam, lam[1:]):
        if a < b:
            raise UsageError("classical partition must be weakly decreasing")
    if not lam:
        return ()
    if lam[-1] <= 0:
        raise UsageError("classical partition parts must be positive")
    cols = []
    j = len(lam)
    for i in range(lam[0]):
        while lam[j - 1] <= i:
            j -= 1
        cols.append(j)
    return tuple(cols)


def _extract(pi, energy, colors, flat):
    """Size and color arrays of a flat (or regular) grounded partition."""
    kind = "flat" if flat else "regular"
    if not pi:
        raise InvalidPartitionError("grounded partition cannot be empty")
    g = colors.ground
    try:
        sizes = [p.size for p in pi]
        cols = [p.color for p in pi]
    except AttributeError:
        raise InvalidPartitionError(
            "parts of a %s partition must be primary" % kind
        ) from None
    if sizes[-1] != 0 or cols[-1] != g:
        raise InvalidPartitionError("terminal part must be the zero ground part")
    if len(pi) > 1 and sizes[-2] == 0 and cols[-2] == g:
        raise InvalidPartitionError("part before the terminal cannot be the zero ground part")
    ev = energy.values
    if flat:
        for i in range(len(sizes) - 1):
            if sizes[i] - sizes[i + 1] != ev[cols[i]][cols[i + 1]]:
                raise InvalidPartitionError(
                    "flat relation fails between %r and %r" % (pi[i], pi[i + 1])
                )
    else:
        for i in range(len(sizes) - 1):
            if cols[i] == g:
                raise InvalidPartitionError("regular partitions avoid the ground color")
            if sizes[i] - sizes[i + 1] < ev[cols[i]][cols[i + 1]]:
                raise InvalidPartitionError(
                    "minimal difference fails between %r and %r" % (pi[i], pi[i + 1])
                )
    return sizes, cols


def _skeleton_sizes(word, energy, g):
    """Suffix energy sums: the minimal sizes carried by a pure color word."""
    ev = energy.values
    sizes = [0] * (len(word) + 1)
    below = g
    for k in range(len(word) - 1, -1, -1):
        sizes[k] = sizes[k + 1] + ev[word[k]][below]
        below = word[k]
    return sizes[:-1]


def decompose(pi, energy, colors):
    """Split a regular partition into (minimal skeleton, residual sizes)."""
    sizes, cols = _extract(pi, energy, colors, flat=False)
    g = colors.ground
    word = cols[:-1]
    mu_sizes = _skeleton_sizes(word, energy, g)
    mu = tuple(Primary(s, c) for s, c in zip(mu_sizes, word)) + (Primary(0, g),)
    nu = tuple(sizes[i] - mu_sizes[i] for i in range(len(word)))
    return mu, nu


def recompose(dec, energy, colors):
    """Inverse of decompose: add residual sizes back onto the skeleton."""
    mu, nu = dec
    body = mu[:-1]
    nu = tuple(nu)
    if len(nu) != len(body):
        raise UsageError("residual must have one entry per non-terminal part")
    if any(v < 0 for v in nu) or any(a < b for a, b in zip(nu, nu[1:])):
        raise UsageError("residual must be weakly decreasing and non-negative")
    out = tuple(Primary(p.size + v, p.color) for p, v in zip(body, nu)) + (mu[-1],)
    _extract(out, energy, colors, flat=False)
    return out


def omega(pi, energy, colors):
    """Map a flat grounded partition to the regular one with the same word and size."""
    ground_delta(energy, colors)
    sizes, cols = _extract(pi, energy, colors, flat=True)
    g = colors.ground
    positions = [i for i in range(len(cols) - 1) if cols[i] != g]
    s = len(positions)
    if s == 0:
        return (Primary(0, g),)
    word = [cols[i] for i in positions]
    ev = energy.values

    # descents live in 1..s-1; position 0 is never a descent
    is_descent = [False] + [ev[word[k - 1]][word[k]] == 0 for k in range(1, s)]
    keeps = [True] * s
    for k in range(1, s):
        if is_descent[k]:
            keeps[k] = positions[k] - positions[k - 1] > 1  # an insertion happened
    suffix = [0] * (s + 1)
    for k in range(s - 1, -1, -1):
        suffix[k] = suffix[k + 1] + (1 if keeps[k] else 0)

    columns = []
    for k in range(s):
        prev = positions[k - 1] if k > 0 else -1
        gap = positions[k] - prev - 1
        if not is_descent[k]:
            columns.extend([suffix[k]] * gap)
        elif keeps[k]:
            columns.extend([suffix[k]] * (gap - 1))
            columns.append(suffix[k] + k)
    columns.sort(reverse=True)
    nu = conjugate(columns)
    nu = nu + (0,) * (s - len(nu))

    mu_sizes = _skeleton_sizes(word, energy, g)
    out = tuple(Primary(mu_sizes[k] + nu[k], word[k]) for k in range(s))
    return out + (Primary(0, g),)


def omega_inv(pi, energy, colors):
    """Map a regular grounded partition back to its flat preimage."""
    dg = ground_delta(energy, colors)
    sizes, cols = _extract(pi, energy, colors, flat=False)
    g = colors.ground
    word = cols[:-1]
    s = len(word)
    if s == 0:
        return (Primary(0, g),)
    mu_sizes = _skeleton_sizes(word, energy, g)
    nu = [sizes[k] - mu_sizes[k] for k in range(s)]
    nu_prime = conjugate([v for v in nu if v > 0])
    sp = len(nu_prime)
    thresholds = [nu_prime[u] - u - 1 for u in range(sp)]
    stairs = [dg + mu_sizes[k] + k for k in range(s)]

    # stairs is non-decreasing and thresholds is decreasing, so the counting
    # comparisons reduce to two-pointer scans
    lifted_sizes = []
    j = sp
    for k in range(s):
        while j > 0 and thresholds[j - 1] < stairs[k]:
            j -= 1
        lifted_sizes.append(mu_sizes[k] + j)
    ascending = lifted_sizes[::-1]
    inserted = []
    i = s
    for u in range(sp):
        while i > 0 and stairs[i - 1] > thresholds[u]:
            i -= 1
        x = nu_prime[u] - i
        # the recovered ground part slots after every lifted part of size
        # at least x + 1 - delta_g, where flatness holds
        target = s - bisect_left(ascending, x + 1 - dg)
        inserted.append((target, x))
    inserted.sort(key=lambda tx: (tx[0], -tx[1]))
    parts = []
    j = 0
    for k in range(s + 1):
        while j < sp and inserted[j][0] == k:
            parts.append(Primary(inserted[j][1], g))
            j += 1
        if k < s:
            parts.append(Primary(lifted_sizes[k], word[k]))
    return tuple(parts) + (Primary(0, g),)
