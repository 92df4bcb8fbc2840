import json

import pytest
from conftest import complexes, overlap_example
from hypothesis import given, settings

from flagcollapse import (
    CollapseCertificate,
    CollapseError,
    CollapseStep,
    FingerprintMismatch,
    WorkingComplex,
    build_graph,
    check_condition,
    clique_complex,
    collapse_link_to_dim,
    collapse_to_dim,
    complete_graph,
    cone_collapse,
    elementary_collapse,
    expand_interval,
    find_free_faces,
    homology_profile,
    lift_steps,
    link,
    verify_certificate,
)
from flagcollapse.complex import as_face_lists


def faces_after(c, steps):
    w = WorkingComplex.from_complex(c)
    for st in steps:
        w.collapse(st)
    return {s for layer in w.layers for s in layer}


class TestStep:
    def test_rejects_non_elementary(self):
        with pytest.raises(ValueError):
            CollapseStep((0,), (0, 1, 2))
        with pytest.raises(ValueError):
            CollapseStep((0, 1), (0, 2, 3))

    def test_json_roundtrip(self):
        st = CollapseStep((0, 1), (0, 1, 2))
        assert CollapseStep.from_json(json.loads(json.dumps(st.to_json()))) == st


class TestFreeFaces:
    def test_triangle(self, k3):
        steps = find_free_faces(k3, 1)
        assert [s.free_face for s in steps] == [(0, 1), (0, 2), (1, 2)]
        assert all(s.coface == (0, 1, 2) for s in steps)

    def test_c4(self, c4):
        assert find_free_faces(c4, 0) == []

    def test_octahedron(self, octahedron):
        assert find_free_faces(octahedron, 1) == []

    def test_negative_min_dim(self, k3):
        with pytest.raises(ValueError):
            find_free_faces(k3, -1)


class TestElementaryCollapse:
    def test_path(self, path3):
        w = elementary_collapse(path3, CollapseStep((0,), (0, 1)))
        assert {s for layer in w.layers for s in layer} == {(1,), (2,), (1, 2)}

    def test_triangle(self, k3):
        w = elementary_collapse(k3, CollapseStep((0, 1), (0, 1, 2)))
        assert {s for layer in w.layers for s in layer} == {(0,), (1,), (2,), (0, 2), (1, 2)}

    def test_twice_errors(self, path3):
        st = CollapseStep((0,), (0, 1))
        w = elementary_collapse(path3, st)
        with pytest.raises(CollapseError):
            w.collapse(st)

    def test_input_untouched(self, k3):
        elementary_collapse(k3, CollapseStep((0, 1), (0, 1, 2)))
        assert k3.f_vector == (3, 3, 1)

    def test_not_free(self, c4):
        with pytest.raises(CollapseError, match="not a free face"):
            elementary_collapse(c4, CollapseStep((0,), (0, 1)))


class TestExpandInterval:
    def test_already_elementary(self):
        assert expand_interval((0, 1), (0, 1, 2)) == [CollapseStep((0, 1), (0, 1, 2))]

    def test_vertex_in_triangle(self):
        steps = expand_interval((0,), (0, 1, 2))
        assert steps == [CollapseStep((0, 2), (0, 1, 2)), CollapseStep((0,), (0, 1))]
        # replay removes exactly the interval [{0}, {0,1,2}]
        assert faces_after(clique_complex(complete_graph(3)), steps) == {(1,), (2,), (1, 2)}

    def test_equal_faces(self):
        with pytest.raises(ValueError):
            expand_interval((0, 1), (0, 1))

    def test_interval_in_3_simplex(self):
        c = clique_complex(complete_graph(4))
        steps = expand_interval((1,), (0, 1, 2, 3))
        assert len(steps) == 4
        assert faces_after(c, steps) == {s for s in c if 1 not in s}


class TestCone:
    def test_triangle(self, k3):
        steps = cone_collapse(k3, 0, 1)
        assert steps == [
            CollapseStep((1, 2), (0, 1, 2)),
            CollapseStep((1,), (0, 1)),
            CollapseStep((2,), (0, 2)),
        ]
        assert faces_after(k3, steps) == {(0,)}

    def test_3_simplex(self, k4):
        steps = cone_collapse(k4, 0, 1)
        # one step per nonempty face of {1,2,3}
        assert len(steps) == 7
        assert faces_after(k4, steps) == {(0,)}

    def test_target_2_keeps_edges(self, k4):
        remaining = faces_after(k4, cone_collapse(k4, 0, 2))
        assert max(map(len, remaining)) == 2

    def test_apex_not_universal(self, c4):
        with pytest.raises(ValueError, match="adjacent"):
            cone_collapse(c4, 0, 1)


class TestLinkCollapse:
    def test_k3_link_is_cone(self, k3):
        steps = collapse_link_to_dim(k3, 1)
        assert max(map(len, faces_after(k3, steps))) == 1

    def test_single_edge(self):
        e = clique_complex(build_graph(2, [(0, 1)]))
        steps = collapse_link_to_dim(e, 1)
        assert len(steps) == 1 and faces_after(e, steps) in ({(0,)}, {(1,)})

    def test_too_many_vertices(self, c4):
        with pytest.raises(ValueError, match="vertices"):
            collapse_link_to_dim(c4, 1)

    def test_no_universal_vertex_recurses(self):
        # path on 3 vertices plus an isolated one is not a cone; k=2 allows 5 vertices
        c = clique_complex(build_graph(5, [(0, 1), (1, 2), (3, 4)]))
        steps = collapse_link_to_dim(c, 2)
        assert steps == []  # already of dimension <= 1
        tri = clique_complex(build_graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)]))
        steps = collapse_link_to_dim(tri, 2)
        assert max(map(len, faces_after(tri, steps))) <= 2


class TestLift:
    def test_single(self):
        assert lift_steps([CollapseStep((0,), (0, 1))], 3) == [CollapseStep((0, 3), (0, 1, 3))]

    def test_empty(self):
        assert lift_steps([], 5) == []

    def test_dimension_check(self):
        with pytest.raises(ValueError):
            lift_steps([CollapseStep((0,), (0, 1))], 3, k=2)

    def test_k3_link_in_k4(self, k4):
        steps = lift_steps(collapse_link_to_dim(link(k4, 3), 1), 3, 1)
        remaining = faces_after(k4, steps)
        assert all(len(s) <= 2 for s in remaining if 3 in s)


class TestCollapseToDim:
    @pytest.mark.parametrize("k", [0, 1, 2, 3])
    def test_single_simplex(self, k):
        c = clique_complex(complete_graph(k + 2))
        out = collapse_to_dim(c, k)
        assert out.success and len(out.certificate.steps) == 1
        assert verify_certificate(c, out.certificate).final_dim == k

    def test_forest(self):
        c = clique_complex(build_graph(8, [(0, 1), (1, 2), (1, 3), (4, 5), (5, 6)]))
        out = collapse_to_dim(c, 0)
        assert out.success and out.certificate.final_dim == 0
        assert len(verify_certificate(c, out.certificate).faces[0]) == 3

    def test_octahedron_failure(self, octahedron):
        out = collapse_to_dim(octahedron, 1)
        assert out.status == "failure"
        assert len(out.witness.facets) == 8 and out.witness.min_degree() == 4
        assert collapse_to_dim(octahedron, 1, "greedy").status == "unknown"

    def test_k4_sufficient_not_necessary(self, k4):
        assert collapse_to_dim(k4, 0).status == "failure"
        out = collapse_to_dim(k4, 0, "greedy")
        assert out.success and out.certificate.final_dim == 0
        final = verify_certificate(k4, out.certificate).faces
        assert homology_profile(final).betti == [1]

    def test_bad_arguments(self, k3):
        with pytest.raises(ValueError):
            collapse_to_dim(k3, -1)
        with pytest.raises(ValueError):
            collapse_to_dim(k3, 0, "random")
        with pytest.raises(TypeError):
            collapse_to_dim(as_face_lists(k3), 0)

    def test_truncated_input_rejected(self):
        with pytest.raises(ValueError, match="truncated"):
            collapse_to_dim(clique_complex(complete_graph(5), dim_cap=2), 1)

    def test_overlapping_closures_still_certified(self):
        c = overlap_example()
        assert check_condition(c, 2).satisfied
        out = collapse_to_dim(c, 2)
        assert out.success and out.greedy_fallback
        assert verify_certificate(c, out.certificate).ok

    @settings(max_examples=120, deadline=None)
    @given(complexes(max_n=10))
    def test_theorem_strategy_properties(self, c):
        for k in (0, 1, 2):
            rep = check_condition(c, k)
            out = collapse_to_dim(c, k)
            assert out.success == rep.satisfied
            if out.success:
                v = verify_certificate(c, out.certificate)
                assert v.ok and v.final_dim <= k
                assert all(st.dim >= k for st in out.certificate.steps)
            else:
                w = out.witness
                assert w.d == k + 1 and w.is_strongly_connected()
                assert w.min_degree() >= 2 * k + 2
                assert all(f in c for f in w.facets)

    @settings(max_examples=80, deadline=None)
    @given(complexes(max_n=10))
    def test_greedy_certificates_verify(self, c):
        for k in (0, 1):
            out = collapse_to_dim(c, k, "greedy")
            if out.success:
                assert verify_certificate(c, out.certificate).ok
            else:
                assert out.witness is None


class TestVerify:
    def test_valid(self, k4):
        out = collapse_to_dim(k4, 0, "greedy")
        v = verify_certificate(k4, out.certificate)
        assert v.ok and v.final_dim == out.certificate.final_dim

    def test_swapped_steps(self, k3):
        cert = collapse_to_dim(k3, 0, "greedy").certificate
        obj = cert.to_json()
        obj["steps"][0], obj["steps"][1] = obj["steps"][1], obj["steps"][0]
        v = verify_certificate(k3, obj)
        assert not v.ok and v.failed_step == 0

    def test_other_complex(self, k3, k4):
        cert = collapse_to_dim(k3, 0, "greedy").certificate
        with pytest.raises(FingerprintMismatch):
            verify_certificate(k4, cert)

    def test_wrong_final_dim(self, k3):
        cert = collapse_to_dim(k3, 1).certificate
        obj = {**cert.to_json(), "final_dim": 0}
        v = verify_certificate(k3, obj)
        assert not v.ok and v.failed_step is None

    def test_file_roundtrip(self, tmp_path):
        c = clique_complex(complete_graph(5))
        cert = collapse_to_dim(c, 2).certificate
        cert.dump(tmp_path / "cert.json")
        loaded = CollapseCertificate.load(tmp_path / "cert.json")
        assert loaded == cert and verify_certificate(c, loaded).ok
