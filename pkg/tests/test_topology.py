import pytest

from polycore.enumeration import enumerate_polyominoes
from polycore.errors import InvalidPolygonError, NotSimpleError
from polycore.grid import (
    LatticePoint,
    edge_components,
    is_inner_interval,
    polyomino_from_anchors,
)
from polycore.topology import (
    CornerKind,
    RectilinearPolygon,
    border_edges,
    border_polygon,
    classify_corners,
    endpoint_violations,
    good_corners,
    holes,
    interior_cells,
    is_simple,
    maximal_border_edge_intervals,
    pinch_points,
    spanned_rectangle,
)


def pts(*coords):
    return [LatticePoint(x, y) for x, y in coords]


def box_without(width, height, missing):
    return polyomino_from_anchors(
        [(x, y) for x in range(width) for y in range(height) if (x, y) not in missing]
    )


PINCHED_RING = [(1, 0), (2, 0), (2, 1), (2, 2), (1, 2), (0, 2), (0, 1)]

SIMPLE_UP_TO_SIX = [P for n in range(1, 7) for P in enumerate_polyominoes(n) if is_simple(P)]


class TestHoles:
    def test_single_cell_hole(self, with_hole):
        found = holes(with_hole)
        assert len(found) == 1
        assert found[0].anchors() == frozenset({(2, 1)})
        assert not is_simple(with_hole)

    def test_zigzag_is_simple(self, zigzag):
        assert holes(zigzag) == []
        assert is_simple(zigzag)

    def test_two_holes_least_first(self):
        found = holes(box_without(5, 3, {(1, 1), (3, 1)}))
        assert [h.anchors() for h in found] == [frozenset({(1, 1)}), frozenset({(3, 1)})]

    def test_hole_of_two_cells(self):
        found = holes(box_without(4, 3, {(1, 1), (2, 1)}))
        assert len(found) == 1
        assert len(found[0]) == 2

    def test_notch_is_not_a_hole(self):
        assert is_simple(box_without(3, 3, {(1, 2)}))

    def test_diagonal_gap_traps_cell(self):
        assert holes(polyomino_from_anchors(PINCHED_RING))[0].anchors() == frozenset({(1, 1)})


class TestBorder:
    def test_square_border_edges(self, square):
        assert len(border_edges(square)) == 8
        assert len(maximal_border_edge_intervals(square)) == 4

    def test_border_intervals_cover_border_edges(self, stairs, with_hole):
        for P in (stairs, with_hole):
            runs = maximal_border_edge_intervals(P)
            assert sum(e.interval.width + e.interval.height for e in runs) == len(border_edges(P))

    def test_square_polygon(self, square):
        assert border_polygon(square).corners == tuple(pts((0, 0), (2, 0), (2, 2), (0, 2)))

    def test_stairs_polygon(self, stairs):
        R = border_polygon(stairs)
        assert R.corners == tuple(
            pts(
                (1, 0), (2, 0), (2, 2), (3, 2), (3, 3), (2, 3), (2, 4),
                (0, 4), (0, 3), (1, 3), (1, 2), (0, 2), (0, 1), (1, 1),
            )
        )
        assert R.signed_area2() == 2 * len(stairs)

    def test_polygon_with_hole(self, with_hole):
        with pytest.raises(NotSimpleError):
            border_polygon(with_hole)

    def test_interior_is_the_polyomino(self, stairs, zigzag):
        for P in (stairs, zigzag):
            assert interior_cells(border_polygon(P)) == P.cells


class TestRectilinearPolygon:
    def test_from_points_normalizes(self):
        cw = pts((0, 1), (2, 1), (2, 0), (1, 0), (0, 0))
        R = RectilinearPolygon.from_points(cw)
        assert R.corners == tuple(pts((0, 0), (2, 0), (2, 1), (0, 1)))

    def test_clockwise_rejected(self):
        with pytest.raises(InvalidPolygonError):
            RectilinearPolygon(tuple(pts((0, 0), (0, 1), (1, 1), (1, 0))))

    def test_odd_corner_count_rejected(self):
        with pytest.raises(InvalidPolygonError):
            RectilinearPolygon(tuple(pts((0, 0), (1, 0), (0, 1))))

    def test_slanted_edge_rejected(self):
        with pytest.raises(InvalidPolygonError):
            RectilinearPolygon(tuple(pts((0, 0), (2, 0), (2, 2), (1, 3))))

    def test_self_intersection_rejected(self):
        crossing = pts((0, 0), (2, 0), (2, 3), (3, 3), (3, 1), (1, 1), (1, 4), (0, 4))
        with pytest.raises(InvalidPolygonError):
            RectilinearPolygon(tuple(crossing))


class TestCorners:
    def test_stairs_corner_counts(self, stairs):
        infos = classify_corners(border_polygon(stairs))
        convex = [i for i in infos if i.kind is CornerKind.CONVEX]
        assert len(infos) == 14
        assert len(convex) == 9

    def test_rectangle_corners_all_good(self, square):
        R = border_polygon(square)
        assert good_corners(R) == list(R.corners)

    def test_good_corner_rectangles_are_inner(self, stairs):
        R = border_polygon(stairs)
        index = {c: i for i, c in enumerate(R.corners)}
        for corner in good_corners(R):
            assert is_inner_interval(stairs, spanned_rectangle(R, index[corner]))


class TestDiagonalTouch:
    def test_pinch_point_found(self):
        P = polyomino_from_anchors(PINCHED_RING)
        assert pinch_points(P) == [LatticePoint(1, 1)]
        assert LatticePoint(1, 1) in endpoint_violations(P)


class TestSimpleStructure:
    """Structural facts about every simple polyomino with at most six cells"""

    def test_border_polygon_is_valid(self):
        for P in SIMPLE_UP_TO_SIX:
            R = border_polygon(P)
            assert R.signed_area2() == 2 * len(P)
            assert interior_cells(R) == P.cells

    def test_no_pinch_points(self):
        assert [P for P in SIMPLE_UP_TO_SIX if pinch_points(P)] == []

    def test_border_intervals_meet_at_endpoints(self):
        assert [P for P in SIMPLE_UP_TO_SIX if endpoint_violations(P)] == []

    def test_convex_minus_concave_is_four(self):
        for P in SIMPLE_UP_TO_SIX:
            infos = classify_corners(border_polygon(P))
            convex = sum(1 for i in infos if i.kind is CornerKind.CONVEX)
            assert convex == len(infos) - convex + 4

    def test_at_least_four_good_corners(self):
        for P in SIMPLE_UP_TO_SIX:
            assert len(good_corners(border_polygon(P))) >= 4, P


def _assert_holes_well_formed(P):
    found = holes(P)
    for H in found:
        assert is_simple(H), (P, H)
    for k, a in enumerate(found):
        for b in found[k + 1:]:
            assert len(edge_components(a.anchors() | b.anchors())) == 2, (P, a, b)


class TestHoleStructure:
    @pytest.mark.parametrize(
        "missing",
        [{(1, 1), (3, 1)}, {(1, 1), (2, 1), (3, 3)}, {(1, 1), (3, 3)}, {(2, 1), (2, 3)}],
    )
    def test_boxes_with_holes(self, missing):
        P = box_without(5, 5, missing)
        assert len(holes(P)) >= 1
        _assert_holes_well_formed(P)

    def test_up_to_seven_cells(self):
        nonsimple = [P for n in range(1, 8) for P in enumerate_polyominoes(n) if not is_simple(P)]
        assert nonsimple
        for P in nonsimple:
            _assert_holes_well_formed(P)

    @pytest.mark.slow
    def test_eight_cells(self):
        for P in enumerate_polyominoes(8):
            if not is_simple(P):
                _assert_holes_well_formed(P)
