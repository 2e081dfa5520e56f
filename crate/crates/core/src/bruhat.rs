//! Bruhat order on the extended affine Weyl group, restricted to a common
//! coset of the affine Weyl group: comparisons by the lifting recursion,
//! cover diagrams and downward closures inside the admissible set.

use std::collections::HashMap;

use crate::admissible::{weyl_orbit_mu, AdmissibleElement};
use crate::affine::AffineElement;
use crate::error::Error;

/// Memoizing comparison context. Elements of different similitude classes
/// are never related; within a class the order is decided by the lifting
/// recursion on lengths and simple reflections, which needs no geometry.
#[derive(Default)]
pub struct BruhatOrder {
    pair_memo: HashMap<(AffineElement, AffineElement), bool>,
    descent_memo: HashMap<AffineElement, Option<usize>>,
}

impl BruhatOrder {
    pub fn new() -> Self {
        Self::default()
    }

    fn smallest_descent(&mut self, x: &AffineElement) -> Option<usize> {
        if let Some(d) = self.descent_memo.get(x) {
            return *d;
        }
        let d = x.smallest_left_descent();
        self.descent_memo.insert(x.clone(), d);
        d
    }

    /// x ≤ y. Results for top-level queries are memoized per pair; the
    /// recursion itself is a single chain of length ℓ(y).
    pub fn leq(&mut self, x: &AffineElement, y: &AffineElement) -> bool {
        assert_eq!(x.genus(), y.genus(), "genus mismatch");
        if x == y {
            return true;
        }
        if x.similitude_class() != y.similitude_class() {
            return false;
        }
        if let Some(&v) = self.pair_memo.get(&(x.clone(), y.clone())) {
            return v;
        }
        let v = self.leq_rec(x.clone(), y.clone());
        self.pair_memo.insert((x.clone(), y.clone()), v);
        v
    }

    fn leq_rec(&mut self, x: AffineElement, y: AffineElement) -> bool {
        if x == y {
            return true;
        }
        if x.im_length() >= y.im_length() {
            return false;
        }
        // ℓ(y) > ℓ(x) ≥ 0, so y has a descent. Lifting property: for
        // s = s_i with sy < y, x ≤ y iff (sx ≤ sy when sx < x, else x ≤ sy).
        let g = y.genus();
        let i = self
            .smallest_descent(&y)
            .expect("an element of positive length has a descent");
        let s = AffineElement::simple_reflection(g, i);
        let sy = s.multiply(&y);
        let sx = s.multiply(&x);
        if sx.im_length() < x.im_length() {
            self.leq_rec(sx, sy)
        } else {
            self.leq_rec(x, sy)
        }
    }

    /// Admissibility by translation domination: x ≤ t^{w(μ)} for some w.
    pub fn admissible_by_domination(&mut self, x: &AffineElement) -> bool {
        if x.similitude_class() != 1 {
            return false;
        }
        weyl_orbit_mu(x.genus())
            .into_iter()
            .any(|v| self.leq(x, &AffineElement::translation(v)))
    }

    /// The length-graded cover diagram of a finite set in a single coset:
    /// edges are pairs x < y in S with ℓ(y) = ℓ(x) + 1. On a downward
    /// closed S the transitive closure of the edges is the full order.
    pub fn covers(&mut self, nodes: &[AffineElement]) -> Result<HasseDiagram, Error> {
        let mut nodes: Vec<AffineElement> = nodes.to_vec();
        nodes.sort();
        nodes.dedup();
        if let Some(first) = nodes.first() {
            if nodes
                .iter()
                .any(|x| x.similitude_class() != first.similitude_class())
            {
                return Err(Error::MixedCosets);
            }
        }
        let lengths: Vec<usize> = nodes.iter().map(|x| x.im_length()).collect();
        let mut edges = Vec::new();
        for (i, x) in nodes.iter().enumerate() {
            for (j, y) in nodes.iter().enumerate() {
                if lengths[j] == lengths[i] + 1 && self.leq(x, y) {
                    edges.push((i, j));
                }
            }
        }
        Ok(HasseDiagram { nodes, edges })
    }

    /// {x ∈ ambient : x ≤ y for some y ∈ upper}. The ambient set is
    /// expected to be the full admissible set of the genus (or any
    /// downward closed superset of `upper`).
    pub fn downward_closure(
        &mut self,
        ambient: &[AdmissibleElement],
        upper: &[AdmissibleElement],
    ) -> Vec<AdmissibleElement> {
        let mut out: Vec<AdmissibleElement> = ambient
            .iter()
            .filter(|x| {
                upper
                    .iter()
                    .any(|y| x.length() <= y.length() && self.leq(x.element(), y.element()))
            })
            .cloned()
            .collect();
        out.sort();
        out
    }
}

/// Nodes plus (lower, upper) cover pairs, edges as indices into `nodes`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HasseDiagram {
    pub nodes: Vec<AffineElement>,
    pub edges: Vec<(usize, usize)>,
}

impl HasseDiagram {
    /// Reachability along edges, reflexively and transitively closed.
    pub fn transitive_leq(&self) -> Vec<Vec<bool>> {
        let n = self.nodes.len();
        let mut reach = vec![vec![false; n]; n];
        for (i, row) in reach.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(lo, hi) in &self.edges {
            reach[lo][hi] = true;
        }
        for k in 0..n {
            let via = reach[k].clone();
            for row in reach.iter_mut() {
                if row[k] {
                    for (j, &step) in via.iter().enumerate() {
                        if step {
                            row[j] = true;
                        }
                    }
                }
            }
        }
        reach
    }
}
