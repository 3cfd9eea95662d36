import copy
import json

import pytest

from TorusConcordance.exceptions import HypothesisException
from TorusConcordance.order import (Certificate, CertificateVerifier, Hypothesis, StepKind, certify_proposition,
                                    certify_upper_bound, load_schema)

def int_paths(node, path=()):
    """Paths to every integer leaf of a JSON document, booleans excluded."""
    if isinstance(node, bool):
        return
    if isinstance(node, int):
        yield path
    elif isinstance(node, dict):
        for key, value in node.items():
            yield from int_paths(value, path + (key,))
    elif isinstance(node, list):
        for idx, value in enumerate(node):
            yield from int_paths(value, path + (idx,))


def mutated(document, path):
    out = copy.deepcopy(document)
    node = out
    for key in path[:-1]:
        node = node[key]
    node[path[-1]] += 1
    return out


@pytest.fixture(scope="module")
def verifier():
    return CertificateVerifier()


def test_proposition_four_nine(verifier):
    cert = certify_proposition(4, 9, 1)
    assert cert.verdict == "[[T(9,13) - T(4,9) - T(9,10)]] >> [1,3,3,1]"
    assert cert.outputs["epsilon"] == 1
    assert cert.outputs["a1"] == 1
    assert cert.outputs["a2_lower_bound"] == 3
    assert cert.all_hypotheses_hold()
    assert cert.axiom_steps()
    assert all(s.lemma for s in cert.steps)
    assert verifier.verify(cert.to_json()).is_successful()


def test_proposition_ten_twentyone():
    cert = certify_proposition(10, 21, 1)
    assert cert.verdict.endswith(">> [1,9,9,1]")
    assert cert.all_hypotheses_hold()


@pytest.mark.parametrize("p, q, k, bound", [(4, 9, 1, "[1,8,8,1]"), (10, 21, 1, "[1,20,20,1]")])
def test_upper_bound(verifier, p, q, k, bound):
    cert = certify_upper_bound(p, q, k)
    assert cert.verdict.startswith("|[[")
    assert cert.verdict.endswith("]]| << {}".format(bound))
    assert verifier.verify(cert.to_json()).is_successful()


@pytest.mark.parametrize("p, q, k", [(4, 9, 0), (3, 7, 1), (4, 7, 1), (4, 8, 1)])
def test_proposition_rejects(p, q, k):
    with pytest.raises(HypothesisException):
        certify_proposition(p, q, k)


def test_structural_steps_are_fully_checked():
    cert = certify_proposition(4, 9, 1)
    lemmas = [s.lemma for s in cert.steps]
    assert lemmas[0] == "preconditions"
    assert "linear-combination" in lemmas
    assert lemmas[-3:] == ["domination-definition", "epsilon-sign", "a-tuple-bound"]
    for step in cert.steps:
        if step.kind == StepKind.STRUCTURAL:
            assert step.hypotheses


def test_json_round_trip_and_schema():
    import jsonschema

    cert = certify_upper_bound(4, 9, 1)
    data = json.loads(cert.dumps())
    jsonschema.validate(instance=data, schema=load_schema("certificate"))
    assert Certificate.from_json(data).to_json() == data


def test_every_number_mutation_fails(verifier):
    data = json.loads(certify_proposition(4, 9, 1).dumps())
    paths = list(int_paths(data))
    assert len(paths) > 20
    for path in paths:
        result = verifier.verify(mutated(data, path))
        assert result.has_error(), path


def test_tampered_documents(verifier):
    data = certify_proposition(4, 9, 1).to_json()
    flipped = copy.deepcopy(data)
    flipped["steps"][0]["hypotheses"][0]["holds"] = False
    assert verifier.verify(flipped).has_error()

    renamed = copy.deepcopy(data)
    renamed["steps"][0]["hypotheses"][0]["check"] = "no_such_check"
    assert "unknown check" in verifier.verify(renamed).get_error_msg()

    assert verifier.verify({"goal": 3}).has_error()
    assert verifier.verify([]).has_error()

    reworded = copy.deepcopy(data)
    reworded["verdict"] = "[[K]] << [1,3,3,1]"
    assert verifier.verify(reworded).has_error()


def test_bundle(verifier):
    bundle = {"proposition": certify_proposition(4, 9, 1).to_json(), "upper_bound": certify_upper_bound(4, 9, 1).to_json()}
    result = verifier.verify(bundle)
    assert result.is_successful()
    assert result.certificates == 2


def test_hypothesis_records():
    h = Hypothesis.evaluate("coprime", a=4, b=9)
    assert h.holds and h.recheck()
    assert Hypothesis.from_json(h.to_json()) == h
    assert not Hypothesis.evaluate("less_than_half", lhs=5, rhs=10).holds
