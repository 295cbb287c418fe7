"""Smoke test for the prelie_py extension module.

Build and install first, for example:
    pip install maturin
    maturin build --release -m crates/py/Cargo.toml -o dist && pip install dist/prelie_py-*.whl
"""

import json

import prelie_py as p


def main():
    trees = p.rooted_trees(4)
    assert len(trees) == 64
    t = p.RootedTree.parse("1(2(4),3)")
    assert str(t) == "1(2(4),3)" and t.root() == 1 and t.children(1) == [2, 3]
    assert p.RootedTree.parse("1(3,2(4))") == t

    a, b = p.PlElement.vertex(1), p.PlElement.vertex(2)
    assert a.pre(b) == p.PlElement.tree("1(2)")
    assert sorted(a.bracket(b).terms()) == [("1(2)", "1"), ("2(1)", "-1")]
    relator = p.PlElement.evaluate("((1<2)<3) - (1<(2<3)) - ((1<3)<2) + (1<(3<2))")
    assert relator.is_zero()
    grafted = p.PlElement.tree("1(2)").graft(2, p.PlElement.tree("3(4)"))
    assert len(grafted.terms()) == 1

    assert [p.quotient_dim("pre-lie", n) for n in (3, 4)] == [9, 64]
    assert [p.cl_dim(n) for n in range(2, 6)] == [1, 1, 2, 6]
    assert [p.y_dim(n) for n in range(2, 5)] == [1, 3, 11]
    assert p.tensor_weight("{[1,2],3}") == 2

    rows = p.series_identity(8)
    assert all(int(actual) == expected for _, expected, actual, _ in rows)
    assert rows[-1][3] is True

    report = json.loads(p.verify_json(["egf", "factorization"], max_arity=4))
    assert report["results"] and all(r["passed"] for r in report["results"])

    try:
        p.quotient_dim("nope", 3)
    except ValueError:
        pass
    else:
        raise AssertionError("unknown presentation accepted")
    print("smoke test passed")


if __name__ == "__main__":
    main()
