// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Hand-built drawings and seeded random generators.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use segpoly::{Edge, PlanarGraph, Point, Segment, SegmentSet, Tolerance};

pub fn segments(coords: &[[f64; 4]]) -> Vec<Segment> {
    coords
        .iter()
        .map(|c| Segment::from_coords(c[0], c[1], c[2], c[3]))
        .collect()
}

/// Validates with the default tolerance; panics on invalid fixtures.
pub fn segment_set(segs: Vec<Segment>) -> SegmentSet {
    SegmentSet::new(segs, Tolerance::default()).expect("valid fixture")
}

pub fn triangle() -> Vec<Segment> {
    segments(&[[0., 0., 4., 0.], [4., 0., 2., 3.], [2., 3., 0., 0.]])
}

pub fn x_cross() -> Vec<Segment> {
    segments(&[[0., 0., 2., 2.], [0., 2., 2., 0.]])
}

pub fn square_with_diagonals(side: f64) -> Vec<Segment> {
    let s = side;
    segments(&[
        [0., 0., s, 0.],
        [s, 0., s, s],
        [s, s, 0., s],
        [0., s, 0., 0.],
        [0., 0., s, s],
        [s, 0., 0., s],
    ])
}

/// The induced graph of [`square_with_diagonals`], built by hand.
pub fn square_with_diagonals_graph(side: f64) -> PlanarGraph {
    let s = side;
    PlanarGraph::from_geometry(
        vec![
            Point::new(0., 0.),
            Point::new(0., s),
            Point::new(s / 2., s / 2.),
            Point::new(s, 0.),
            Point::new(s, s),
        ],
        &[
            (0, 1),
            (0, 3),
            (1, 4),
            (3, 4),
            (0, 2),
            (1, 2),
            (2, 3),
            (2, 4),
        ],
    )
    .expect("valid graph")
}

pub fn two_triangles() -> Vec<Segment> {
    segments(&[
        [0., 0., 1., 0.],
        [1., 0., 0., 1.],
        [0., 1., 0., 0.],
        [5., 5., 6., 5.],
        [6., 5., 5., 6.],
        [5., 6., 5., 5.],
    ])
}

/// `rows` nearly horizontal and `cols` nearly vertical segments, each
/// crossing every segment of the other family exactly once. All endpoints
/// are distinct and no three segments meet, so there are `rows * cols`
/// intersections.
pub fn generic_grid(rows: usize, cols: usize) -> Vec<Segment> {
    let (w, h) = ((cols + 1) as f64, (rows + 1) as f64);
    let mut segs = Vec::with_capacity(rows + cols);
    for i in 1..=rows {
        let y = i as f64;
        segs.push(Segment::from_coords(
            0.0,
            y + 0.013 * y * y,
            w,
            y + 0.07 * y,
        ));
    }
    for j in 1..=cols {
        let x = j as f64;
        segs.push(Segment::from_coords(
            x + 0.011 * x,
            0.0,
            x + 0.05 * x * x / (cols as f64),
            h + 0.017 * x,
        ));
    }
    segs
}

/// Six segments with nine pairwise crossings in general position.
pub fn six_lines_nine_crossings() -> Vec<Segment> {
    generic_grid(3, 3)
}

/// A central `petals`-gon with a triangle glued onto each of its sides.
/// Any subset of petals merged with the centre bounds a cycle, so there
/// are `2^petals + petals` elementary cycles.
pub fn petal_graph(petals: usize) -> PlanarGraph {
    let m = petals as f64;
    let ring = |r: f64, k: f64| {
        let a = std::f64::consts::TAU * k / m;
        Point::new(r * a.cos(), r * a.sin())
    };
    let mut pts: Vec<Point> = (0..petals).map(|k| ring(1.0, k as f64)).collect();
    pts.extend((0..petals).map(|k| ring(1.6, k as f64 + 0.5)));
    let mut pairs = Vec::new();
    for k in 0..petals {
        let next = (k + 1) % petals;
        pairs.extend([(k, next), (k, petals + k), (petals + k, next)]);
    }
    PlanarGraph::from_geometry(pts, &pairs).expect("valid graph")
}

fn direction(rng: &mut ChaCha8Rng) -> (f64, f64) {
    let a = rng.gen_range(0.0..std::f64::consts::TAU);
    (a.cos(), a.sin())
}

/// Random segments in a 100x100 box: mostly free-standing, some starting
/// inside an earlier segment (T-junctions), some passing through an earlier
/// endpoint.
pub fn random_mixed(seed: u64, n: usize) -> Vec<Segment> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut segs: Vec<Segment> = Vec::with_capacity(n);
    while segs.len() < n {
        let roll: f64 = rng.gen();
        let (dx, dy) = direction(&mut rng);
        let len = rng.gen_range(1.0..30.0);
        let seg = if roll < 0.2 && !segs.is_empty() {
            let host = segs[rng.gen_range(0..segs.len())];
            let t = rng.gen_range(0.1..0.9);
            let p = Point::new(
                host.a.x + t * (host.b.x - host.a.x),
                host.a.y + t * (host.b.y - host.a.y),
            );
            Segment::new(p, Point::new(p.x + len * dx, p.y + len * dy))
        } else if roll < 0.3 && !segs.is_empty() {
            let host = segs[rng.gen_range(0..segs.len())];
            let p = if rng.gen() { host.a } else { host.b };
            let back = rng.gen_range(0.2..0.8) * len;
            Segment::from_coords(
                p.x - back * dx,
                p.y - back * dy,
                p.x + (len - back) * dx,
                p.y + (len - back) * dy,
            )
        } else {
            let (x, y) = (rng.gen_range(0.0..100.0), rng.gen_range(0.0..100.0));
            Segment::from_coords(x, y, x + len * dx, y + len * dy)
        };
        segs.push(seg);
    }
    segs
}

/// Random segments at constant density: the box grows with `n` so the
/// expected number of crossings per segment stays fixed, at about seven.
/// That is dense enough for most edges to join one large biconnected block.
pub fn random_drawing(seed: u64, n: usize) -> Vec<Segment> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let side = 3.0 * (n as f64).sqrt();
    (0..n)
        .map(|_| {
            let (dx, dy) = direction(&mut rng);
            let len = rng.gen_range(2.0..12.0);
            let (x, y) = (rng.gen_range(0.0..side), rng.gen_range(0.0..side));
            Segment::from_coords(x, y, x + len * dx, y + len * dy)
        })
        .collect()
}

/// Random connected simple graph with 3 to 8 vertices and at most
/// `max_edges` edges. Odd seeds use small integer weights so that equal
/// length cycles are common.
pub fn random_connected_graph(seed: u64, max_edges: usize) -> PlanarGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(3..=8usize);
    let most = (n * (n - 1) / 2).min(max_edges.max(n - 1));
    let target = rng.gen_range(n - 1..=most);
    let mut pairs: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    while pairs.len() < target {
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        let key = (u.min(v), u.max(v));
        if u != v && !pairs.contains(&key) {
            pairs.push(key);
        }
    }
    let integer = seed % 2 == 1;
    let edges = pairs
        .into_iter()
        .map(|(u, v)| {
            let w = if integer {
                rng.gen_range(1..=3) as f64
            } else {
                rng.gen_range(0.5..10.0)
            };
            Edge::new(u, v, w)
        })
        .collect();
    let pts = (0..n)
        .map(|_| Point::new(rng.gen_range(0.0..10.0), rng.gen_range(0.0..10.0)))
        .collect();
    PlanarGraph::new(pts, edges).expect("valid random graph")
}

/// Named drawings used for golden-output and determinism tests.
pub fn named() -> Vec<(String, Vec<Segment>)> {
    let mut all = vec![
        ("triangle".to_string(), triangle()),
        ("x_cross".to_string(), x_cross()),
        (
            "square_with_diagonals".to_string(),
            square_with_diagonals(1.0),
        ),
        ("two_triangles".to_string(), two_triangles()),
        (
            "six_lines_nine_crossings".to_string(),
            six_lines_nine_crossings(),
        ),
        ("grid_4x5".to_string(), generic_grid(4, 5)),
        (
            "house".to_string(),
            segments(&[
                [0., 0., 4., 0.],
                [4., 0., 4., 3.],
                [4., 3., 0., 3.],
                [0., 3., 0., 0.],
                [0., 3., 2., 5.],
                [2., 5., 4., 3.],
                [1., 0., 1., 2.],
                [1., 2., 2., 2.],
                [2., 2., 2., 0.],
            ]),
        ),
        (
            "star".to_string(),
            segments(&[
                [0., 3., 6., 3.],
                [3., 0., 3., 6.],
                [0., 0., 6., 6.],
                [0., 6., 6., 0.],
                [0., 0., 6., 0.],
                [6., 0., 6., 6.],
                [6., 6., 0., 6.],
                [0., 6., 0., 0.],
            ]),
        ),
    ];
    for seed in 0..12 {
        let n = 10 + 5 * seed as usize;
        let segs = if seed % 2 == 0 {
            random_mixed(seed, n)
        } else {
            random_drawing(seed, n)
        };
        all.push((format!("random_{seed:02}"), segs));
    }
    all
}
