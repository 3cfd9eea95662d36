import json
import logging
import traceback
from importlib import resources
from typing import Any, Optional

import jsonschema

from .certificate import Certificate
from .checks import REGISTRY, CheckRegistry, Hypothesis
from .family import ExplicitRule, FamilyBuilder
from .proposition import CertificateBuilder

BUNDLE_KEYS = ("proposition", "upper_bound")
FAMILY_KEYS = ("members", "knots", "certificate")

def load_schema(name: str) -> dict[str, Any]:
    """Load a schema shipped in TorusConcordance/schemas, e.g. "certificate"."""
    text = resources.files("TorusConcordance.schemas").joinpath("{}.schema.json".format(name)).read_text(encoding="utf-8")
    return json.loads(text)


class VerificationResult:
    """
    Outcome of re-verifying a stored certificate.
    """
    error_msg: Optional[str]
    certificates: int

    def __init__(self, error_msg: Optional[str] = None, certificates: int = 0):
        self.error_msg = error_msg
        self.certificates = certificates

    def has_error(self) -> bool:
        """
        Whether verification failed.
        """
        return self.error_msg is not None

    def get_error_msg(self) -> str:
        """
        Get the error message. Only works when there is an error.
        """
        if not self.has_error():
            raise ValueError("Only works when there is an error!")
        return self.error_msg

    def errorify(self, error_msg: str) -> None:
        """
        Mark a successful result as failed.
        """
        self.error_msg = error_msg

    def is_successful(self) -> bool:
        return not self.has_error()


def _normalized(data: Any) -> Any:
    return json.loads(json.dumps(data))


class CertificateVerifier:
    """
    Re-checks stored certificates. A certificate passes when it matches the
    schema, every recorded hypothesis re-evaluates to true, and re-deriving the
    certificate from its goal parameters reproduces the stored document exactly.

    Accepts a single certificate, a bundle {"proposition": ..., "upper_bound": ...}
    or a family document {"members": ..., "knots": ..., "certificate": ...}.
    Never raises on tampered input.
    """
    logger: logging.Logger
    schema: dict[str, Any]
    registry: CheckRegistry

    def __init__(self, logger: Optional[logging.Logger] = None, schema: Optional[dict[str, Any]] = None,
                 registry: CheckRegistry = REGISTRY) -> None:
        self.logger = logger if logger is not None else logging.getLogger(__name__)
        self.schema = schema if schema is not None else load_schema("certificate")
        self.registry = registry

    def verify(self, data: Any) -> VerificationResult:
        result = VerificationResult()
        if isinstance(data, dict) and "goal" not in data and "certificate" in data:
            error = _family_document_error(data)
            if error is not None:
                result.errorify(error)
                return result
            data = data["certificate"]
        if isinstance(data, dict) and "goal" not in data and set(data.keys()) == set(BUNDLE_KEYS):
            for key in BUNDLE_KEYS:
                self._verify_one(data[key], key, result)
                if result.has_error():
                    break
        else:
            self._verify_one(data, "certificate", result)
        return result

    def verify_file(self, path: str) -> VerificationResult:
        try:
            with open(path, "r", encoding="utf-8") as f:
                data = json.load(f)
        except (OSError, ValueError) as e:
            return VerificationResult("Cannot read {}: {}".format(path, e))
        return self.verify(data)

    def _verify_one(self, data: Any, label: str, result: VerificationResult) -> None:
        try:
            jsonschema.validate(instance=data, schema=self.schema)
        except jsonschema.ValidationError as e:
            result.errorify("{}: schema violation: {}".format(label, e.message))
            return

        error = self._recheck_hypotheses(data, label)
        if error is not None:
            result.errorify(error)
            return

        try:
            rebuilt = self._rederive(data["goal"])
        except Exception as e:
            self.logger.debug("\n".join(traceback.format_exception(type(e), e, e.__traceback__)))
            result.errorify("{}: cannot re-derive from goal parameters: {}".format(label, e))
            return
        if _normalized(rebuilt.to_json()) != _normalized(data):
            result.errorify("{}: stored certificate differs from its re-derivation".format(label))
            return
        result.certificates += 1 + _count_members(data)
        self.logger.debug("{} verified: {}".format(label, data["verdict"]))

    def _recheck_hypotheses(self, data: dict[str, Any], label: str) -> Optional[str]:
        for idx, step in enumerate(data["steps"]):
            for hyp_data in step["hypotheses"]:
                hypothesis = Hypothesis.from_json(hyp_data)
                if not self.registry.has_check(hypothesis.check):
                    return "{}: step {} uses unknown check {}".format(label, idx, hypothesis.check)
                if not hypothesis.holds:
                    return "{}: step {} records a failed hypothesis {}".format(label, idx, hypothesis.check)
                try:
                    reproduced = hypothesis.recheck(self.registry)
                except Exception as e:
                    return "{}: step {} check {} cannot be evaluated: {}".format(label, idx, hypothesis.check, e)
                if not reproduced:
                    return "{}: step {} check {} does not hold".format(label, idx, hypothesis.check)
        for member_idx, member in enumerate(data.get("members", [])):
            error = self._recheck_hypotheses(member, "{}.members[{}]".format(label, member_idx))
            if error is not None:
                return error
        return None

    def _rederive(self, goal: dict[str, Any]) -> Certificate:
        """
        Raises:
            KeyError, TypeError, ValueError: If the parameters cannot be re-derived.
        """
        theorem = goal["theorem"]
        params = goal["parameters"]
        if theorem in BUNDLE_KEYS:
            p, q, k = _exact_int(params["p"]), _exact_int(params["q"]), _exact_int(params["k"])
            builder = CertificateBuilder(self.logger)
            if theorem == "proposition":
                return builder.certify_proposition(p, q, k)
            return builder.certify_upper_bound(p, q, k)
        if theorem == "family":
            members = [[_exact_int(x) for x in m] for m in params["members"]]
            family = FamilyBuilder(self.logger, parallel=False).build(len(members), ExplicitRule(members))
            return family.certificate
        raise ValueError("Unknown theorem {}".format(theorem))


def _family_document_error(data: dict[str, Any]) -> Optional[str]:
    """
    The family output {"members": ..., "knots": ..., "certificate": ...} must
    repeat the certificate's own goal parameters and outputs exactly.
    """
    if set(data.keys()) != set(FAMILY_KEYS):
        return "family document: expected keys {}, got {}".format(sorted(FAMILY_KEYS), sorted(data.keys()))
    certificate = data["certificate"]
    try:
        members = certificate["goal"]["parameters"]["members"]
        knots = certificate["outputs"]["knots"]
    except (KeyError, TypeError):
        return "family document: certificate has no members or knots"
    if json.dumps(data["members"]) != json.dumps(members):
        return "family document: members differ from the certificate goal"
    if json.dumps(data["knots"]) != json.dumps(knots):
        return "family document: knots differ from the certificate outputs"
    return None


def _exact_int(value: Any) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError("Expected an integer, got {!r}".format(value))
    return value


def _count_members(data: dict[str, Any]) -> int:
    return sum(1 + _count_members(m) for m in data.get("members", []))


def verify_certificate(data: Any) -> VerificationResult:
    return CertificateVerifier().verify(data)
