"""Walk one flat partition through the degree-one bijection and back.

A flat partition steps down by exactly the energy of each color pair; a
regular partition steps down by at least that much and never uses the
ground color before its terminal part.  The bijection trades the interior
ground-colored parts for extra size on the colored parts, keeping the total
size and the sequence of non-ground colors fixed.
"""

from partition_forge import (
    color_word,
    format_partition,
    load_energy,
    parse_partition,
    partition_size,
)
from partition_forge.deg1 import decompose, omega, omega_inv

colors, energy = load_energy("demos/energies/two_color_mixed.energy")

flat = parse_partition(
    "6a 5a 5b 4c 4c 4c 4b 4a 3c 3a 2a 1c 1c 1b 1a 1b 1b 0c", colors, energy
)
print("flat     :", format_partition(flat, colors, energy))
print("size     :", partition_size(flat, energy))
print("word     :", "".join(colors.label(c) for c in color_word(flat, colors)))

regular = omega(flat, energy, colors)
print("regular  :", format_partition(regular, colors, energy))
print("size     :", partition_size(regular, energy))

mu, nu = decompose(regular, energy, colors)
print("skeleton :", format_partition(mu, colors, energy))
print("residual :", nu)

back = omega_inv(regular, energy, colors)
print("roundtrip:", "ok" if back == flat else "BROKEN")
