import json
import subprocess
import sys

import pytest

from bfk.catalog import construct_named
from bfk.char_table import CharacterTable, character_table
from bfk.cli import _clean, main
from bfk.expr import ExprError, evaluate
from bfk.rep_rings import gamma_n


def run(capsys, *argv):
    code = main(["--json", *argv])
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_table_json(capsys):
    code, data = run(capsys, "table", "Q8")
    assert code == 0 and data["pass"]
    assert len(data["irr"]) == 5 and len(data["irr"][0]) == 5
    assert data["degrees"] == [1, 1, 1, 1, 2]
    G = construct_named("Q8")
    assert CharacterTable.from_json(G, data) == character_table(G)


def test_cokernel_cli(capsys):
    code, data = run(capsys, "cokernel", "C3xQ8")
    assert code == 0 and data["f2_dim"] == 3


def test_verify_chain_q16(capsys):
    code, data = run(capsys, "verify", "chain", "Q16")
    assert code == 0 and data["pass"]
    assert data["cases"][0]["F_dims"] == {"3": 1, "4": 1, "5": 0}


def test_orbits_and_detect(capsys):
    code, data = run(capsys, "orbits", "C12", "K2")
    assert code == 0 and data["count"] == 9
    code, data = run(capsys, "detect", "C3xQ8", "tensor(one(), gamma(3))")
    assert code == 0 and data["in_image"] is False and data["discrepancy"] is False


def test_genetic_and_fn(capsys):
    code, data = run(capsys, "genetic", "Q8")
    assert code == 0 and data["size"] == 5
    code, data = run(capsys, "fn-eval", "Q16", "4", "--mode", "exact")
    assert code == 0 and data["dim"] == 1


def test_ops(capsys):
    code, data = run(capsys, "ops", "on(Q16, ind(Q16, Q8, gamma(3)))")
    assert code == 0 and data["coefficients"] == gamma_n(4, construct_named("Q16")).to_json()


@pytest.mark.parametrize("argv,needle", [
    (["ops", "irr(1"], "position"),
    (["table", "Q4"], "position"),
    (["ops", "foo(1)", "--group", "Q8"], "position 0"),
])
def test_errors_exit_nonzero(capsys, argv, needle):
    code, data = run(capsys, *argv)
    assert code == 1 and not data["pass"] and needle in data["error"]


def test_bound_error_verbatim(capsys):
    code, data = run(capsys, "--bound", "4", "table", "perm:[(1,2,3,4,5,6,7,8,9,10,11)]")
    assert code == 1 and "bound 4 exceeded" in data["error"]


def test_failing_check_exit_code(capsys):
    code, data = run(capsys, "verify", "quat", "D16")
    assert code == 1 and not data["pass"]


def test_big_ints_become_strings():
    assert _clean({"a": [2**70, 3]}) == {"a": [str(2**70), 3]}


def test_text_mode(capsys):
    assert main(["cokernel", "Q8"]) == 0
    out = capsys.readouterr().out
    assert "f2_dim: 1" in out and "pass: true" in out


def test_console_script():
    r = subprocess.run([sys.executable, "-m", "bfk.cli", "--json", "cokernel", "Q8"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and json.loads(r.stdout)["f2_dim"] == 1


# -- expression grammar -----------------------------------------------------------

def test_expression_literals():
    Q8 = construct_named("Q8")
    assert evaluate("gamma(3)", Q8) == gamma_n(3, Q8)
    assert evaluate("2*irr(4) - irr(4)", Q8) == gamma_n(3, Q8)
    assert evaluate("3", Q8).coeffs.tolist() == [3, 0, 0, 0, 0]
    assert evaluate("classsum(Q, 4)", Q8) == gamma_n(3, Q8)
    assert evaluate("regular()", Q8).degree() == 8
    assert evaluate("irr(4)*irr(4)", Q8).coeffs.tolist() == [1, 1, 1, 1, 0]


def test_expression_pipelines():
    a = evaluate("indinf(Q16, C2, C2, irr(1))")
    assert a == evaluate("2*on(Q16, gamma(4))")
    b = evaluate("res(Q16, Q8, on(Q16, gamma(4)))")
    assert b.coeffs.tolist() == [0, 0, 0, 0, 2]
    c = evaluate("defl(Q8, C2xC2, on(Q8, gamma(3)))")
    assert c.norm() == 0
    d = evaluate("defres(Q16, Q16, D8, inf(Q16, D8, irr(4)))")
    assert d.degree() == 2 and d.norm() == 1
    with pytest.raises(ExprError, match="without on"):
        evaluate("inf(Q16, D8, on(D8, irr(4)))")


@pytest.mark.parametrize("text,pos", [("irr(1", 3), ("foo(1)", 0), ("gamma(4)", 0), ("irr(1) + 1", 0)])
def test_expression_errors(text, pos):
    with pytest.raises(ExprError) as exc:
        evaluate(text, construct_named("Q8"))
    assert exc.value.pos == pos
