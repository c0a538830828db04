"""Run the full theorem check on a few hand-built fans in dimensions 3 to 5."""
from toricample import catalog
from toricample.splitting import splitting_counter
from toricample.theorem import verify_theorem

fans = dict(catalog.threefolds())
fans["BlP3 twice"] = catalog.star_blowup(fans["BlP3"], 0)
fans["P4"] = catalog.projective_space(4)
fans["P2xP2"] = catalog.product(catalog.p2(), catalog.p2(), "P2xP2")
fans["P5"] = catalog.projective_space(5)

for name, fan in fans.items():
    rep = verify_theorem(fan)
    pc = rep.polytope_checks
    types = {"".join(f"{a:+d}" for a in k): v for k, v in sorted(splitting_counter(fan).items())}
    print(f"{name:<11} {rep.classification.verdict.value:<12} is_pn={rep.is_pn!s:<5} "
          f"simplex={'-' if pc is None else pc.simplex!s:<5} {'pass' if rep.passed else 'FAIL'}  {types}")
