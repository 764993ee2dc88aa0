"""Print the q = 5 worked example end to end (generator 3)."""

from dhm.adic import complexity, determine_exact
from dhm.cyclotomy import build_classes
from dhm.gaussring import gauss_periods
from dhm.ntheory import build_params
from dhm.sequence import build_sequence, evaluate_at_2

p = build_params(5, theta_override=3)
table = build_classes(p)
gps = gauss_periods(p, table)
print("classes:", table.classes, " 2 in class", p.k)
print("periods mod 1023:", [e.value for e in gps.eta], " G =", gps.G.value)
for triple in [(1, 0, 3), (1, 2, 3), (0, 1, 2), (0, 3, 2)]:
    seq = build_sequence(p, table, triple, tilde=True)
    rep = complexity(seq)
    v = determine_exact(5, triple, True, theta=3)
    print(f"{triple} tilde: bits={seq.bitstring()} S(2)={evaluate_at_2(seq)} "
          f"d={rep.d} C2={rep.exact_str()} ~ {rep.approx_bits:.4f}  predicted d={v.predicted_d}")
