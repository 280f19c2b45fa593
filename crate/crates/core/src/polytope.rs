//! Lattice-point geometry of configuration sets: exact vertex identification,
//! hull equality, and strict separation witnesses.
//!
//! A point of a finite set is a vertex of the convex hull iff it is not a
//! convex combination of the remaining points; that membership question is a
//! rational feasibility problem, decided exactly by the phase-1 simplex in
//! [`crate::lp`]. Vertices correspond to essential monomials of the flat
//! entry polynomials; non-vertex members are quasi-essential (flat
//! polynomials admit no strictly inessential monomials, since every monomial
//! ties the maximum at the all-zeros input).

use std::collections::BTreeSet;

use num_traits::Signed;

use crate::digraph::Config;
use crate::error::{Error, Result};
use crate::lp::{equality_feasible, Feasibility};
use crate::semiring::Rat;

/// A finite nonempty set of lattice points sharing one ambient dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfigSet {
    dim: usize,
    points: BTreeSet<Config>,
}

impl ConfigSet {
    pub fn from_points(dim: usize, points: impl IntoIterator<Item = Config>) -> Result<Self> {
        let points: BTreeSet<Config> = points.into_iter().collect();
        if points.is_empty() {
            return Err(Error::Parse("a configuration set must be nonempty".into()));
        }
        if let Some(bad) = points.iter().find(|p| p.dim() != dim) {
            return Err(Error::DimensionMismatch {
                left: dim,
                right: bad.dim(),
            });
        }
        Ok(ConfigSet { dim, points })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    #[allow(clippy::len_without_is_empty)] // config sets are nonempty
    pub fn points(&self) -> impl Iterator<Item = &Config> {
        self.points.iter()
    }

    pub fn contains(&self, p: &Config) -> bool {
        self.points.contains(p)
    }

    /// Splits the points into hull vertices and the remaining (non-vertex)
    /// members.
    ///
    /// Output-sensitive per-point LP scheme: each point is tested for
    /// membership in the hull of the extreme points found so far; a
    /// membership failure yields a separating direction whose maximizer over
    /// the whole set (lexicographically largest among ties, hence itself
    /// extreme) joins the known hull. Every LP therefore has at most as many
    /// columns as there are vertices.
    pub fn vertices(&self) -> VertexReport {
        let all: Vec<&Config> = self.points.iter().collect();
        let mut hull: Vec<&Config> = Vec::new();
        let mut extreme = vec![false; all.len()];
        let mut classified = vec![false; all.len()];
        let index_of = |p: &Config| all.binary_search_by(|q| (*q).cmp(p)).expect("member");
        for idx in 0..all.len() {
            while !classified[idx] {
                match hull_membership(all[idx], &hull) {
                    Feasibility::Feasible => {
                        classified[idx] = true;
                    }
                    Feasibility::Infeasible { farkas } => {
                        let direction = &farkas[..self.dim];
                        let best = all
                            .iter()
                            .map(|q| (q.dot(direction), *q))
                            .max_by(|(va, qa), (vb, qb)| va.cmp(vb).then_with(|| qa.cmp(qb)))
                            .map(|(_, q)| q)
                            .expect("nonempty");
                        let best_idx = index_of(best);
                        debug_assert!(!extreme[best_idx]);
                        hull.push(best);
                        extreme[best_idx] = true;
                        classified[best_idx] = true;
                    }
                }
            }
        }
        let mut vertices = Vec::new();
        let mut quasi = Vec::new();
        for (idx, p) in all.into_iter().enumerate() {
            if extreme[idx] {
                vertices.push(p.clone());
            } else {
                quasi.push(p.clone());
            }
        }
        VertexReport { vertices, quasi }
    }

    /// Whether the two sets span the same convex hull, i.e. have equal vertex
    /// sets. For the flat entry polynomials this is exactly equality of the
    /// induced piecewise-linear functions.
    pub fn hull_equal(&self, other: &ConfigSet) -> Result<bool> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        Ok(self.vertices().vertices == other.vertices().vertices)
    }

    /// Debug dump: a header line `dim <d> count <k>` followed by one line of
    /// space-separated coordinates per point.
    pub fn dump(&self) -> String {
        let mut out = format!("dim {} count {}\n", self.dim, self.points.len());
        for p in &self.points {
            out.push_str(&p.to_string());
            out.push('\n');
        }
        out
    }
}

/// Vertex/non-vertex partition of a configuration set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexReport {
    /// Hull vertices, in lexicographic order.
    pub vertices: Vec<Config>,
    /// Non-vertex members (quasi-essential points), in lexicographic order.
    pub quasi: Vec<Config>,
}

impl VertexReport {
    pub fn is_vertex(&self, p: &Config) -> bool {
        self.vertices.binary_search(p).is_ok()
    }
}

/// Exact membership test `p in conv(points)` via phase-1 simplex.
fn in_convex_hull(p: &Config, points: &[&Config]) -> bool {
    matches!(hull_membership(p, points), Feasibility::Feasible)
}

/// Exact membership test against the hull of a configuration set.
pub fn in_hull(p: &Config, omega: &ConfigSet) -> Result<bool> {
    if p.dim() != omega.dim() {
        return Err(Error::DimensionMismatch {
            left: p.dim(),
            right: omega.dim(),
        });
    }
    let points: Vec<&Config> = omega.points().collect();
    Ok(in_convex_hull(p, &points))
}

fn hull_membership(p: &Config, points: &[&Config]) -> Feasibility {
    let dim = p.dim();
    // Rows: one per coordinate, plus the convexity row of ones; columns are
    // the candidate points.
    let mut rows: Vec<Vec<Rat>> = (0..dim)
        .map(|coord| {
            points
                .iter()
                .map(|q| Rat::from_integer(q.coords()[coord].into()))
                .collect()
        })
        .collect();
    rows.push(vec![Rat::from_integer(1.into()); points.len()]);
    let mut rhs: Vec<Rat> = p
        .coords()
        .iter()
        .map(|&c| Rat::from_integer(c.into()))
        .collect();
    rhs.push(Rat::from_integer(1.into()));
    equality_feasible(&rows, &rhs)
}

/// A strict separating direction: `<p, direction>` exceeds `<q, direction>`
/// for every `q` in the set, by at least `margin > 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparatingDirection {
    pub direction: Vec<Rat>,
    pub margin: Rat,
}

/// Computes an exact rational direction strictly separating `p` from the
/// convex hull of `omega`. Fails with [`Error::NoSeparation`] when `p` lies
/// in the hull. The returned inequality is re-verified by direct inner
/// products before it leaves this module.
pub fn separating_witness(p: &Config, omega: &ConfigSet) -> Result<SeparatingDirection> {
    if p.dim() != omega.dim() {
        return Err(Error::DimensionMismatch {
            left: p.dim(),
            right: omega.dim(),
        });
    }
    let points: Vec<&Config> = omega.points().collect();
    let farkas = match hull_membership(p, &points) {
        Feasibility::Feasible => return Err(Error::NoSeparation),
        Feasibility::Infeasible { farkas } => farkas,
    };
    // Farkas vector y = (y_coords, y_one) satisfies <y_coords, q> + y_one <= 0
    // for all q and <y_coords, p> + y_one > 0; its coordinate part is the
    // separating direction.
    let direction: Vec<Rat> = farkas[..omega.dim()].to_vec();
    let p_value = p.dot(&direction);
    let mut margin: Option<Rat> = None;
    for q in omega.points() {
        let gap = &p_value - q.dot(&direction);
        if !gap.is_positive() {
            return Err(Error::Internal(
                "separating direction failed direct re-verification".into(),
            ));
        }
        margin = Some(match margin {
            None => gap,
            Some(m) if gap < m => gap,
            Some(m) => m,
        });
    }
    let margin = margin.ok_or(Error::Internal("empty configuration set".into()))?;
    Ok(SeparatingDirection { direction, margin })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semiring::rat_int;
    use num_traits::Zero as _;
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    fn cfg(coords: &[u64]) -> Config {
        Config::from_coords(coords.to_vec())
    }

    fn set(points: &[&[u64]]) -> ConfigSet {
        let dim = points[0].len();
        ConfigSet::from_points(dim, points.iter().map(|p| cfg(p))).unwrap()
    }

    #[test]
    fn collinear_midpoint_is_quasi() {
        let s = set(&[&[0, 0], &[1, 1], &[2, 2]]);
        let report = s.vertices();
        assert_eq!(report.vertices, vec![cfg(&[0, 0]), cfg(&[2, 2])]);
        assert_eq!(report.quasi, vec![cfg(&[1, 1])]);
    }

    #[test]
    fn singleton_is_its_own_vertex() {
        let s = set(&[&[3, 4, 5]]);
        let report = s.vertices();
        assert_eq!(report.vertices, vec![cfg(&[3, 4, 5])]);
        assert!(report.quasi.is_empty());
    }

    #[test]
    fn segment_midpoint_in_two_dims() {
        let s = set(&[&[0, 2], &[2, 0], &[1, 1]]);
        let report = s.vertices();
        assert_eq!(report.vertices, vec![cfg(&[0, 2]), cfg(&[2, 0])]);
        assert_eq!(report.quasi, vec![cfg(&[1, 1])]);
    }

    #[test]
    fn hull_equality_ignores_interior_points() {
        let a = set(&[&[0, 0], &[2, 2]]);
        let b = set(&[&[0, 0], &[1, 1], &[2, 2]]);
        assert!(a.hull_equal(&b).unwrap());
        assert!(a.hull_equal(&a).unwrap());
        let c = set(&[&[1, 1]]);
        assert!(!a.hull_equal(&c).unwrap());
        let d = set(&[&[0, 0]]);
        assert!(!c.hull_equal(&d).unwrap());
    }

    #[test]
    fn hull_equal_checks_dimensions() {
        let a = set(&[&[0, 0]]);
        let b = set(&[&[0, 0, 0]]);
        assert!(matches!(
            a.hull_equal(&b),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn witness_for_point_off_a_segment() {
        let omega = set(&[&[0, 2], &[1, 1]]);
        let w = separating_witness(&cfg(&[2, 0]), &omega).unwrap();
        let p_val = cfg(&[2, 0]).dot(&w.direction);
        for q in omega.points() {
            assert!(p_val > q.dot(&w.direction));
        }
        assert!(w.margin.is_positive());
    }

    #[test]
    fn witness_refuses_interior_points() {
        let omega = set(&[&[0, 0], &[2, 2]]);
        assert!(matches!(
            separating_witness(&cfg(&[1, 1]), &omega),
            Err(Error::NoSeparation)
        ));
    }

    #[test]
    fn witness_in_three_dims() {
        let omega = set(&[&[1, 0, 0], &[0, 1, 0]]);
        let w = separating_witness(&cfg(&[0, 0, 1]), &omega).unwrap();
        let p_val = cfg(&[0, 0, 1]).dot(&w.direction);
        for q in omega.points() {
            assert!(&p_val - q.dot(&w.direction) >= w.margin);
        }
        // The third axis separates with margin 1; whichever direction the LP
        // found, the verified margin must be positive.
        assert!(w.margin.is_positive());
        let axis = vec![rat_int(0), rat_int(0), rat_int(1)];
        assert_eq!(cfg(&[0, 0, 1]).dot(&axis), rat_int(1));
    }

    #[test]
    fn dump_format_is_stable() {
        let s = set(&[&[1, 0], &[0, 2]]);
        assert_eq!(s.dump(), "dim 2 count 2\n0 2\n1 0\n");
    }

    // -----------------------------------------------------------------
    // Independent oracle: Caratheodory-style subset enumeration. A point
    // lies in the hull of a set iff it is a convex combination of an
    // affinely independent subset of at most dim+1 points; such subsets
    // give square-ish linear systems solvable by exact Gaussian
    // elimination, with no simplex machinery involved.
    // -----------------------------------------------------------------

    fn oracle_in_hull(p: &Config, points: &[&Config]) -> bool {
        let dim = p.dim();
        let max_size = (dim + 1).min(points.len());
        let mut chosen: Vec<usize> = Vec::new();
        subsets(points.len(), max_size, 0, &mut chosen, &mut |subset| {
            let pts: Vec<&Config> = subset.iter().map(|&i| points[i]).collect();
            convex_combination_exact(p, &pts)
        })
    }

    fn subsets(
        total: usize,
        max_size: usize,
        start: usize,
        chosen: &mut Vec<usize>,
        test: &mut impl FnMut(&[usize]) -> bool,
    ) -> bool {
        if !chosen.is_empty() && test(chosen) {
            return true;
        }
        if chosen.len() == max_size {
            return false;
        }
        for next in start..total {
            chosen.push(next);
            if subsets(total, max_size, next + 1, chosen, test) {
                chosen.pop();
                return true;
            }
            chosen.pop();
        }
        false
    }

    /// Solves `sum lambda_i q_i = p, sum lambda_i = 1` by Gaussian
    /// elimination; true iff the system has a unique solution with all
    /// coefficients nonnegative. Affinely dependent subsets are skipped
    /// (a smaller independent subset witnesses membership instead).
    fn convex_combination_exact(p: &Config, pts: &[&Config]) -> bool {
        let dim = p.dim();
        let cols = pts.len();
        // Augmented matrix of (dim + 1) x (cols + 1).
        let mut m: Vec<Vec<Rat>> = (0..dim)
            .map(|c| {
                let mut row: Vec<Rat> = pts
                    .iter()
                    .map(|q| Rat::from_integer(q.coords()[c].into()))
                    .collect();
                row.push(Rat::from_integer(p.coords()[c].into()));
                row
            })
            .collect();
        let mut ones = vec![Rat::from_integer(1.into()); cols];
        ones.push(Rat::from_integer(1.into()));
        m.push(ones);

        let rows = m.len();
        let mut pivot_of_col: Vec<Option<usize>> = vec![None; cols];
        let mut r = 0;
        for c in 0..cols {
            let Some(pr) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(r, pr);
            let inv = m[r][c].clone();
            for v in &mut m[r] {
                *v = &*v / &inv;
            }
            for i in 0..rows {
                if i != r && !m[i][c].is_zero() {
                    let f = m[i][c].clone();
                    for j in 0..=cols {
                        let delta = &f * &m[r][j];
                        m[i][j] = &m[i][j] - &delta;
                    }
                }
            }
            pivot_of_col[c] = Some(r);
            r += 1;
            if r == rows {
                break;
            }
        }
        // Inconsistent system: a zero row with nonzero rhs.
        for i in r..rows {
            if !m[i][cols].is_zero() {
                return false;
            }
        }
        // Underdetermined (affinely dependent): skip.
        if pivot_of_col.iter().any(Option::is_none) {
            return false;
        }
        pivot_of_col.iter().all(|&pr| {
            let lambda = &m[pr.unwrap()][cols];
            !lambda.is_negative()
        })
    }

    fn arb_config_set() -> impl Strategy<Value = (usize, Vec<Vec<u64>>)> {
        (1usize..=4).prop_flat_map(|dim| {
            proptest::collection::vec(
                proptest::collection::vec(0u64..=5, dim),
                1..=12,
            )
            .prop_map(move |pts| (dim, pts))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]

        /// The LP vertex test agrees with the subset-enumeration oracle.
        #[test]
        fn lp_matches_caratheodory_oracle((dim, raw) in arb_config_set()) {
            let unique: BTreeSet<Config> =
                raw.into_iter().map(Config::from_coords).collect();
            let s = ConfigSet::from_points(dim, unique.clone()).unwrap();
            let report = s.vertices();
            let all: Vec<&Config> = unique.iter().collect();
            for p in &all {
                let others: Vec<&Config> =
                    all.iter().filter(|q| q != &p).copied().collect();
                let oracle_vertex = !oracle_in_hull(p, &others);
                prop_assert_eq!(
                    report.is_vertex(p),
                    oracle_vertex,
                    "disagreement at {:?}",
                    p
                );
            }
            // The report partitions the set.
            prop_assert_eq!(report.vertices.len() + report.quasi.len(), s.len());
        }

        /// Any witness produced for a non-member vertex strictly separates.
        #[test]
        fn witnesses_strictly_separate((dim, raw) in arb_config_set()) {
            let unique: BTreeSet<Config> =
                raw.into_iter().map(Config::from_coords).collect();
            if unique.len() < 2 {
                return Ok(());
            }
            let mut iter = unique.iter();
            let p = iter.next().unwrap().clone();
            let rest: BTreeSet<Config> = iter.cloned().collect();
            let omega = ConfigSet::from_points(dim, rest).unwrap();
            match separating_witness(&p, &omega) {
                Ok(w) => {
                    let pv = p.dot(&w.direction);
                    for q in omega.points() {
                        prop_assert!(&pv - q.dot(&w.direction) >= w.margin);
                    }
                    prop_assert!(w.margin.is_positive());
                }
                Err(Error::NoSeparation) => {
                    let pts: Vec<&Config> = omega.points().collect();
                    prop_assert!(oracle_in_hull(&p, &pts));
                }
                Err(other) => return Err(TestCaseError::fail(other.to_string())),
            }
        }

        /// Restricting both sets to a zero-sum coordinate face preserves
        /// hull equality, provided the face is attained on both sides.
        #[test]
        fn face_restriction_preserves_hull_equality(
            (dim, raw) in arb_config_set(),
            face_mask in proptest::collection::vec(any::<bool>(), 4),
        ) {
            let base: BTreeSet<Config> =
                raw.into_iter().map(Config::from_coords).collect();
            let s1 = ConfigSet::from_points(dim, base.clone()).unwrap();
            // Same hull: vertices plus a sample of original points.
            let verts = s1.vertices().vertices;
            let mut enriched: BTreeSet<Config> = verts.into_iter().collect();
            enriched.extend(base.iter().take(base.len() / 2).cloned());
            let s2 = ConfigSet::from_points(dim, enriched).unwrap();
            prop_assert!(s1.hull_equal(&s2).unwrap());

            let coords: Vec<usize> =
                (0..dim).filter(|&c| face_mask[c]).collect();
            let on_face = |p: &Config| coords.iter().all(|&c| p.coords()[c] == 0);
            let f1: Vec<Config> = s1.points().filter(|p| on_face(p)).cloned().collect();
            let f2: Vec<Config> = s2.points().filter(|p| on_face(p)).cloned().collect();
            // The face is a supporting one iff the minimum coordinate sum is
            // zero on both sides; with equal hulls the minima agree, so the
            // faces are nonempty together.
            prop_assert_eq!(f1.is_empty(), f2.is_empty());
            if !f1.is_empty() {
                let c1 = ConfigSet::from_points(dim, f1).unwrap();
                let c2 = ConfigSet::from_points(dim, f2).unwrap();
                prop_assert!(c1.hull_equal(&c2).unwrap());
            }
        }
    }
}
