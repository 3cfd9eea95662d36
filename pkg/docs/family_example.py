import sys
sys.path.append("../src")
import json
import logging

import TorusConcordance.order as order
from TorusConcordance.upsilon import upsilon_of_sum

if __name__ == "__main__":
    # initialize logger to console
    logger = logging.getLogger("family")
    logger.setLevel(logging.DEBUG)
    console_handler = logging.StreamHandler()
    console_handler.setLevel(logging.DEBUG)
    console_handler.setFormatter(logging.Formatter(
        "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    ))
    logger.addHandler(console_handler)

    # certify the first three members, one thread per member
    builder = order.FamilyBuilder(logger=logger, parallel=True)
    family = builder.build(3, order.DefaultRule())
    for (p, q, k), knot in zip(family.members, family.knots):
        print("p={} q={} k={}: {} (Upsilon vanishes: {})".format(p, q, k, knot, upsilon_of_sum(knot).is_zero()))
    print(family.certificate.verdict)

    # store and re-verify
    with open("family_certificate.json", "w", encoding="utf-8") as f:
        json.dump(family.certificate.to_json(), f, indent=2)
    with open("family_certificate.json", "r", encoding="utf-8") as f:
        result = order.CertificateVerifier(logger).verify(json.load(f))
    print("verified" if result.is_successful() else result.get_error_msg())
