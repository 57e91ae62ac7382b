use proptest::prelude::*;

use reset_planner::budget_graph::{dijkstra, WeightedGraph};
use reset_planner::geometry::{circle_boundary_intersections, polyline_length, Point, Polytope, DEFAULT_TOL};
use reset_planner::wavefront::level_radii;
use reset_planner::{plan, Method, PlanOptions, Scenario};

fn point() -> impl Strategy<Value = Point> {
    (-50.0..50.0f64, -50.0..50.0f64).prop_map(|(x, y)| Point::new(x, y))
}

/// Random convex polygon: points on a circle at sorted angles.
fn polygon() -> impl Strategy<Value = Polytope> {
    (point(), 0.5..5.0f64, prop::collection::vec(0.0..std::f64::consts::TAU, 3..9)).prop_filter_map(
        "degenerate polygon",
        |(c, r, mut angles)| {
            angles.sort_by(f64::total_cmp);
            let pts: Vec<Point> = angles.iter().map(|a| c + Point::new(a.cos(), a.sin()) * r).collect();
            Polytope::from_vertices(0, &pts, DEFAULT_TOL).ok().filter(|p| p.area() > 1e-3)
        },
    )
}

struct Dense(Vec<Vec<Option<f64>>>);

impl WeightedGraph for Dense {
    fn node_count(&self) -> usize {
        self.0.len()
    }
    fn for_each_neighbor<F: FnMut(usize, f64)>(&self, node: usize, mut visit: F) {
        for (v, w) in self.0[node].iter().enumerate() {
            if let Some(w) = w {
                visit(v, *w);
            }
        }
    }
}

proptest! {
    #[test]
    fn containment_grows_with_tolerance(poly in polygon(), p in point(), t in 0.0..1e-3f64) {
        if poly.contains(p, 0.0) {
            prop_assert!(poly.contains(p, t));
        }
        prop_assert!(poly.contains(poly.centroid(), 0.0));
    }

    #[test]
    fn polyline_length_is_reversal_invariant(pts in prop::collection::vec(point(), 1..10)) {
        let mut rev = pts.clone();
        rev.reverse();
        prop_assert!((polyline_length(&pts) - polyline_length(&rev)).abs() <= 1e-9);
        prop_assert!(polyline_length(&pts) + 1e-9 >= pts[0].distance(pts[pts.len() - 1]));
    }

    #[test]
    fn circle_hits_lie_on_boundary_and_circle(poly in polygon(), c in point(), r in 0.1..60.0f64) {
        for q in circle_boundary_intersections(&poly, c, r, DEFAULT_TOL) {
            prop_assert!((q.distance(c) - r).abs() <= 1e-6 * r.max(1.0));
            prop_assert!(poly.max_violation(q) <= 1e-7);
        }
    }

    #[test]
    fn levels_end_exactly_at_budget(q in 0.01..100.0f64, d in 1usize..20) {
        let radii = level_radii(q, d);
        prop_assert_eq!(radii.len(), d);
        prop_assert_eq!(radii[d - 1], q);
        prop_assert!(radii.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn scenario_json_round_trips(poly in polygon(), s in point(), q in 0.5..20.0f64) {
        let far = s + Point::new(200.0, 0.0);
        if let Ok(scn) = Scenario::new(s, far, q, vec![poly], 3, DEFAULT_TOL) {
            prop_assert_eq!(Scenario::from_json(&scn.to_json()).unwrap(), scn);
        }
    }

    #[test]
    fn short_trips_are_straight(s in point(), e in point()) {
        let q = s.distance(e) + 0.5;
        let scn = Scenario::new(s, e, q, vec![], 4, DEFAULT_TOL).unwrap();
        let out = plan(&scn, &PlanOptions::default()).unwrap();
        prop_assert_eq!(out.solution.method, Method::StraightLine);
        prop_assert_eq!(out.solution.total_length, s.distance(e));
    }

    #[test]
    fn dijkstra_matches_floyd_warshall(
        n in 2usize..25,
        weights in prop::collection::vec(prop::option::weighted(0.3, 0.1..10.0f64), 625),
    ) {
        let adj: Vec<Vec<Option<f64>>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { None } else { weights[i * 25 + j] }).collect())
            .collect();
        let mut dist = vec![vec![f64::INFINITY; n]; n];
        for i in 0..n {
            dist[i][i] = 0.0;
            for j in 0..n {
                if let Some(w) = adj[i][j] {
                    dist[i][j] = w;
                }
            }
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    dist[i][j] = dist[i][j].min(dist[i][k] + dist[k][j]);
                }
            }
        }
        let g = Dense(adj);
        match dijkstra(&g, 0, n - 1) {
            Some((path, len)) => {
                prop_assert!((len - dist[0][n - 1]).abs() <= 1e-9);
                prop_assert_eq!(path[0], 0);
                prop_assert_eq!(*path.last().unwrap(), n - 1);
            }
            None => prop_assert!(dist[0][n - 1].is_infinite()),
        }
    }
}
