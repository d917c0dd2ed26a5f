from fractions import Fraction as F

from roundsleek import regions as R


def test_circle_membership_is_exact():
    c = R.Circle()
    assert c.contains((F(3, 5), F(4, 5)))
    assert not c.contains((F(3, 5), F(4, 5) + F(1, 10**12)))


def test_open_arc_excludes_its_ends():
    arc = R.CircleArc((0, 0), 1, (1, -1), (1, 1), closed=False)
    assert arc.contains((F(1), F(0)))
    assert not arc.contains((F(-1), F(0)))
    assert arc.contains((F(4, 5), F(3, 5)))
    assert not arc.contains((F(3, 5), F(4, 5)))


def test_halfplane_and_quadrant():
    y1 = R.HalfPlane((0, 1), 0)
    y2 = R.HalfPlane((-1, 0), 0)
    q = R.IntersectionRegion([y1, y2])
    assert q.contains((F(0), F(0)))
    assert q.contains((F(1), F(-1)))
    assert not q.contains((F(-1, 100), F(-1)))


def test_segment_and_disk():
    seg = R.Segment((-1, 0), (1, 0))
    assert seg.contains((F(1, 3), F(0))) and not seg.contains((F(2), F(0)))
    assert not R.Segment((-1, 0), (1, 0), closed=False).contains((F(1), F(0)))
    disk = R.Disk((0, 0), 1, closed=False)
    assert not disk.contains((F(1), F(0))) and disk.contains((F(0), F(0)))


def test_product_region_of_line_and_labels():
    region = R.ProductRegion([R.IntervalUnion.real_line(), R.IntervalUnion.points([0, 1])])
    assert region.contains((F(7), F(1)))
    assert not region.contains((F(7), F(1, 2)))


def test_clip_polygon_to_halfplane():
    square = R.box((F(0), F(0)), F(1))
    clipped = R.clip_polygon(square, [((F(1), F(0)), F(0))])  # x <= 0
    assert clipped and max(p[0] for p in clipped) == 0


def test_json_round_trip():
    regions = [
        R.Circle(),
        R.CircleArc((0, 0), 1, (1, -1), (1, 1), closed=False),
        R.Segment((-1, 0), (1, 0)),
        R.HalfPlane((0, 1), 0),
        R.Disk((0, 0), 1, closed=True),
        R.UnionRegion([R.Disk((0, 0), 1), R.Disk((3, 0), 1)]),
        R.IntersectionRegion([R.Circle(), R.Segment((-1, 0), (1, 0))]),
    ]
    for region in regions:
        back = R.region_from_json(region.to_json())
        assert back.to_json() == region.to_json()


def test_arc_moves_stay_on_the_arc():
    arc = R.CircleArc((0, 0), 1, (1, -1), (1, 1), closed=False)
    p = (F(4, 5), F(3, 5))
    moves = list(arc.moves(p, F(1, 64)))
    assert moves and all(arc.contains(m) for m in moves)
