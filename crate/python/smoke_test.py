"""Smoke test for the cominq_py extension module.

Build and run:

    cargo build -p cominq-py --release --features extension-module
    cp target/release/libcominq_py.so python/cominq_py.so
    python3 python/smoke_test.py

(or `maturin develop -m crates/python/pyproject.toml`).
"""

import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))

import cominq_py as cq


def main():
    e7 = cq.Space("E7")
    assert len(e7) == 56 and e7.dimension == 27 and e7.diameter == 3
    assert e7.gamma([7], 1) == [1, 3, 4, 2, 5, 4, 3, 1, 7, 6, 5, 4, 2, 3, 4, 5, 6, 7]
    assert e7.x_small(2) == [7, 6, 5, 4, 2, 3, 4, 5, 6, 7]
    assert e7.verify_dx3()

    gr = cq.Space("Gr(2,4)")
    assert gr.representatives()[-1] == [2, 1, 3, 2]
    assert gr.line_chain([2, 1, 3, 2]) == [[], [2], [2, 1, 3, 2]]
    assert gr.bruhat_leq([2], [1, 2])
    assert all(ok for _, ok, _ in gr.verify_all())

    t = cq.QKTable()
    assert len(t) == 351 and t.max_q_degree == 2 and t.index() == 12
    assert t.multiply("O1", "O1") == "O2"
    assert t.multiply("O1 + O2", "O16") == "q O5 + q O6"
    assert all(ok for _, ok, _ in t.verify())

    assert cq.enumerate_sequences(2) == [[2], [1, 1], [0, 2], [0, 1, 1]]
    assert cq.count_sequences(5, 1, 3) == 3
    assert cq.alt_binomial_sum(3) == 0
    assert cq.cancellation_sum(3, [4, -7, 11]) == 0
    assert cq.check_oracles(3, 3, 42)[1] == 0

    code, payload = cq.run_cli(["--json", "qk", "mult", "O16", "O16"])
    assert code == 0 and json.loads(payload)["results"]["product"] == "q^2 O8''"

    try:
        cq.Space("F4")
    except ValueError:
        pass
    else:
        raise AssertionError("unsupported space accepted")

    print("cominq_py smoke test passed")


if __name__ == "__main__":
    main()
