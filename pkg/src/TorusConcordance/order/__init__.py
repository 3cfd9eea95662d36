from .a_tuple import Condition, Comparison, EpsilonSign, ATuple, classify, compare, satisfies
from .classes import Bracket, Remainder, ClassExpr, PeelResult, peel, join, split
from .checks import CheckRegistry, Hypothesis, REGISTRY
from .certificate import StepKind, Relation, DominationFact, Step, Goal, Certificate, CertificateLog, require_holds
from .decomposition import Branch, DecompositionRecord, decompose_torus, expected_prefix
from .proposition import CertificateBuilder, certify_proposition, certify_upper_bound
from .family import FamilyRule, DefaultRule, DoublingRule, ExplicitRule, RULES, FamilyBuilder, FamilyResult, build_family
from .verify import VerificationResult, CertificateVerifier, verify_certificate, load_schema
