#!/usr/bin/env python3
"""Walk through the classification of F_2[C_9 x C_3].

The divisor count tau(9) = 3 would predict three equivalence classes of
minimal codes; the actual count is four, because the two dimension-2 code
families sit over subgroups (<a> vs <a^3> x <b>) that no automorphism of
the group can exchange.
"""

from abelian_codes import classify, field_make, group_make

G = group_make([9, 3])
F2 = field_make(2)

report = classify(G, F2, with_distributions=True)

print("group C_9 x C_3 over GF(2)")
print("minimal codes:", len(report.codes))
for rec in report.codes:
    print(
        "  orbit rep %-8s  owning subgroup order %-2d  dim %-2d  min weight %d"
        % (
            rec.code.generator.orbit_rep,
            rec.code.generator.phi_subgroup.order,
            rec.dimension,
            rec.min_weight,
        )
    )

print()
print("equivalence classes: %d   tau(exp G) = %d   match: %s"
      % (report.class_count, report.tau, report.matches_tau))
for cls in report.classes:
    rep = cls.representative
    print(
        "  class of size %d: dim %-2d  min weight %-2d  distribution %s"
        % (cls.size, rep.dimension, rep.min_weight, rep.distribution.histogram)
    )
