"""Build-tree smoke test for the python bindings."""

import sys

try:
    import qcat
except ImportError:
    import _qcat as qcat

LINE3 = {
    "quantale": "cost",
    "objects": ["p0", "p1", "p2"],
    "hom": [[0, 1, 2], [1, 0, 1], [2, 1, 0]],
}

GAP2 = {
    "quantale": "cost",
    "objects": ["a", "b"],
    "hom": [[0, 2], [2, 0]],
}


def check(label, got, want):
    if got != want:
        print(f"smoke: {label}: got {got!r}, want {want!r}", file=sys.stderr)
        sys.exit(1)


report = qcat.validate(LINE3)
check("validate kind", report["kind"], "category")
check("validate verdict", report["valid"], True)

raw = {
    "quantale": "bool2",
    "objects": ["a", "b", "c"],
    "hom": [
        [False, True, False],
        [False, False, True],
        [False, False, False],
    ],
}
closed = qcat.close(raw)
check(
    "closure hom",
    closed["hom"],
    [[True, True, True], [False, True, True], [False, False, True]],
)

check("cost tensor", qcat.value_tensor("cost", 1, 2), 3)
check("cost hom", qcat.value_hom("cost", 1, 3), 2)
check("cost hom to bottom", qcat.value_str("cost", "inf"), "inf")
check("float is exact", qcat.value_str("unit", 0.25), "1/4")
check(
    "delta tensor",
    qcat.value_tensor("delta", [[1, "1/2"]], [[2, "2/5"]]),
    [[3, "1/5"]],
)

inter = qcat.interpolate("cost", 2, 3, 4)
check("interpolation verdict", inter["ok"], True)
check("interpolation target", inter["target"], 5)
check("interpolation witness", inter["witnesses"], [{"u_prime": 2, "v_prime": 3}])

psi = qcat.yoneda(LINE3, "p1")
check("yoneda values", psi["psi"], [1, 0, 1])
check("yoneda distance", qcat.presheaf_dist(psi, psi), 0)

half = {"base": GAP2, "psi": ["1/2", "1/2"]}
check("halfway presheaf", qcat.right_adjoint(half)["adjoint"], False)

check("gap counterexample", qcat.exp_check(GAP2)["counterexample"], True)
check("laws", qcat.quantale_test("unit", samples=25)["passed"], True)

moved = qcat.base_change("I_inf", LINE3)
check("base change target", moved["quantale"], "delta")

seq = {"base": LINE3, "preamble": ["p0"], "cycle": ["p1"]}
check("convergence", qcat.seq_converges(seq, "p1")["converges"], True)
check("divergence", qcat.seq_converges(seq, "p0")["converges"], False)

try:
    qcat.yoneda(LINE3, "nowhere")
except ValueError:
    pass
else:
    print("smoke: unknown object accepted", file=sys.stderr)
    sys.exit(1)

print("smoke: ok")
