"""Compare a level-one character against its product formula, exactly.

The flat partitions for a crystal-derived energy generate the character of
a level-one standard module once sizes pass through the configured change
of variables.  Both enumeration routes (transform the minimal-energy
enumeration, or enumerate directly under the transformed energy) must give
the same truncated series as the Pochhammer product.
"""

from partition_forge.characters import build_config, character_lhs, character_rhs

config = build_config("A2n2", 2)
print("colors:", ", ".join(config.colors.names), "(ground %s)" % config.colors.label(config.colors.ground))
print("minimal energy rows:")
for name, row in zip(config.colors.names, config.energy.values):
    print("   %-4s" % name, row)
print("transformed energy rows:")
for name, row in zip(config.colors.names, config.energy_prime.values):
    print("   %-4s" % name, row)

order = 6
names = [config.colors.label(c) for c in config.colors.non_ground]
lhs = character_lhs(config, order, route="direct")
via = character_lhs(config, order, route="transform")
rhs = character_rhs(config, order)
print("routes agree:", lhs == via)
print("lhs == product:", lhs == rhs)
print("q-coefficients with colors at 1:", lhs.q_coefficients())
print("series head:", " + ".join(lhs.text(names).split(" + ")[:6]), "+ ...")
