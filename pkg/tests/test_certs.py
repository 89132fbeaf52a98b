import json

import pytest
import support

from gpi import certs
from gpi.freealg import Context, FreePoly
from gpi.genmat import eval_word_closed
from gpi.identity import GeneratorKind, expand, make_generator
from gpi.rewrite import (JCombination, RewriteChain, congruence_chain,
                         express_in_J, verify_chain, verify_combination)
from gpi.z3reduce import ReductionCertificate, reduce_type1, reduce_type2, \
    verify_certificate
from gpi.groups import cyclic_group, default_grading

Z3 = default_grading(cyclic_group(3))


def chain_fixture():
    c = Context(Z3, {1: 1, 2: 2, 3: 1})
    return congruence_chain(c, (1, 2, 3), (3, 2, 1))


class TestContextRoundTrip:
    def test_round_trip(self):
        c = Context(Z3, {1: 1, 2: 2, 7: 0})
        doc = certs.context_to_json(c)
        back = certs.context_from_json(doc)
        assert back.compatible(c)

    def test_malformed(self):
        with pytest.raises(certs.CertificateFormatError):
            certs.context_from_json({"grading": [0, 1, 2], "vars": {}})


class TestChainDocuments:
    def test_round_trip(self):
        chain = chain_fixture()
        doc = certs.chain_to_json(chain)
        back = certs.certificate_from_json(doc)
        assert isinstance(back, RewriteChain)
        assert back.start == chain.start and back.end == chain.end
        assert back.moves == chain.moves
        assert verify_chain(back)

    def test_dumps_is_deterministic(self):
        chain = chain_fixture()
        assert certs.dumps(certs.chain_to_json(chain)) == \
            certs.dumps(certs.chain_to_json(chain_fixture()))

    def test_version_checked(self):
        doc = certs.chain_to_json(chain_fixture())
        doc["version"] = 99
        with pytest.raises(certs.CertificateFormatError):
            certs.certificate_from_json(doc)


class TestCombinationDocuments:
    def test_round_trip(self):
        c = Context(Z3, {1: 1, 2: 2, 3: 1})
        f = expand(make_generator(GeneratorKind.TYPE2, c, ((1,), (2,), (3,))))
        comb = express_in_J(f)
        doc = certs.jcomb_to_json(comb)
        back = certs.certificate_from_json(json.loads(certs.dumps(doc)))
        assert isinstance(back, JCombination)
        assert verify_combination(back, claimed=f)


class TestReductionDocuments:
    def test_round_trip_type1(self):
        rand = support.rng(501)
        g = support.random_generator(rand, Z3, GeneratorKind.TYPE1, 4)
        cert = reduce_type1(g)
        doc = certs.reduction_to_json(cert)
        back = certs.certificate_from_json(json.loads(certs.dumps(doc)))
        assert isinstance(back, ReductionCertificate)
        assert verify_certificate(back)

    def test_round_trip_type2(self):
        rand = support.rng(502)
        g = support.random_generator(rand, Z3, GeneratorKind.TYPE2, 4)
        cert = reduce_type2(g)
        doc = certs.reduction_to_json(cert)
        back = certs.certificate_from_json(json.loads(certs.dumps(doc)))
        assert verify_certificate(back)

    def test_unknown_kind(self):
        doc = certs.chain_to_json(chain_fixture())
        doc["kind"] = "mystery"
        with pytest.raises(certs.CertificateFormatError):
            certs.certificate_from_json(doc)


class TestMatrixJson:
    def test_positions_are_one_based(self):
        c = Context(Z3, {1: 1})
        doc = certs.matrix_to_json(eval_word_closed(c, (1,)))
        assert doc["n"] == 3
        assert {(e["row"], e["col"]) for e in doc["entries"]} == \
            {(1, 2), (2, 3), (3, 1)}
        first = [e for e in doc["entries"] if e["row"] == 1][0]
        assert first["terms"] == [{"coeff": 1, "vars": [[1, 1, 2, 1]]}]

    def test_poly_json_sorted(self):
        c = Context(Z3, {1: 1, 2: 2})
        p = FreePoly(c, {(2, 1): -1, (1, 2): 1})
        assert certs.poly_to_json(p) == [
            {"coeff": 1, "word": [1, 2]}, {"coeff": -1, "word": [2, 1]}]
