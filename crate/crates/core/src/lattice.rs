//! The two-coloured `t`-lattice and its vertex-disjoint path systems.
//!
//! Vertices `v^∘_{x,y}` and `v^•_{x,y}` sit at every position `(x, y)` with
//! `0 ≤ y < N`. From a position with `y > 0` there are five kinds of
//! outgoing edges, see [`EdgeKind`]. Edges never decrease `x` and never
//! increase `y`, so a scenario only needs the columns between its leftmost
//! source and rightmost sink; [`TLattice`] is that finite window.

use std::collections::HashSet;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::maps::CoefficientMap;
use crate::matrix::{ring_determinant, Matrix};
use crate::ring::Ring;
use crate::schur::DiagonalWeightSequence;
use crate::shapes::{build_bit_tableau, BitStats, Partition};
use crate::tpoly::{PolyRing, TPolynomial};

type Elem<F> = <<F as CoefficientMap>::Ring as Ring>::Elem;
type Poly<F> = TPolynomial<Elem<F>>;
/// Paths from each source (outer) to each sink (inner).
type PathTable<E> = Vec<Vec<Vec<Arc<LatticePath<E>>>>>;
/// A permutation with one chosen path per source.
type Choice<E> = (Vec<usize>, Vec<Arc<LatticePath<E>>>);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Color {
    White,
    Black,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LatticeVertex {
    pub x: i64,
    pub y: usize,
    pub color: Color,
}

impl LatticeVertex {
    pub const fn white(x: i64, y: usize) -> Self {
        LatticeVertex {
            x,
            y,
            color: Color::White,
        }
    }

    pub const fn black(x: i64, y: usize) -> Self {
        LatticeVertex {
            x,
            y,
            color: Color::Black,
        }
    }
}

/// The five edge kinds leaving position `(x, y)`, `y > 0`, with their
/// weights in terms of the coefficient map `f` and the diagonal weights
/// `(a_x)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum EdgeKind {
    /// `∘(x,y) → ∘(x,y−1)`, weight 1.
    Down,
    /// `∘(x,y) → ∘(x+1,y−1)`, weight `f(a_x, y)`.
    Step,
    /// `∘(x,y) → •(x+1,y)`, weight `t·f(a_x, y)`.
    Enter,
    /// `•(x,y) → ∘(x+1,y−1)`, weight `f(a_x, y)`.
    Leave,
    /// `•(x,y) → •(x+1,y)`, weight `t·f(a_x, y)`.
    Slide,
}

impl EdgeKind {
    pub const ALL: [EdgeKind; 5] = [
        EdgeKind::Down,
        EdgeKind::Step,
        EdgeKind::Enter,
        EdgeKind::Leave,
        EdgeKind::Slide,
    ];

    /// Edge kinds by their conventional numbering `1..=5`.
    pub fn from_number(k: u8) -> Option<EdgeKind> {
        EdgeKind::ALL.get(usize::from(k).checked_sub(1)?).copied()
    }

    pub fn tail_color(self) -> Color {
        match self {
            EdgeKind::Down | EdgeKind::Step | EdgeKind::Enter => Color::White,
            EdgeKind::Leave | EdgeKind::Slide => Color::Black,
        }
    }

    /// Whether the weight carries a factor `t`.
    pub fn has_t(self) -> bool {
        matches!(self, EdgeKind::Enter | EdgeKind::Slide)
    }

    /// Whether the weight carries a factor `f(a_x, y)`.
    pub fn has_f(self) -> bool {
        !matches!(self, EdgeKind::Down)
    }
}

/// An edge of kind `kind` leaving position `(x, y)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Edge {
    pub kind: EdgeKind,
    pub x: i64,
    pub y: usize,
}

impl Edge {
    pub fn tail(&self) -> LatticeVertex {
        LatticeVertex {
            x: self.x,
            y: self.y,
            color: self.kind.tail_color(),
        }
    }

    pub fn head(&self) -> LatticeVertex {
        let (x, y) = (self.x, self.y);
        match self.kind {
            EdgeKind::Down => LatticeVertex::white(x, y - 1),
            EdgeKind::Step | EdgeKind::Leave => LatticeVertex::white(x + 1, y - 1),
            EdgeKind::Enter | EdgeKind::Slide => LatticeVertex::black(x + 1, y),
        }
    }
}

/// A directed path together with its weight.
#[derive(Debug, Clone, PartialEq)]
pub struct LatticePath<E> {
    pub start: LatticeVertex,
    pub end: LatticeVertex,
    pub edges: Vec<Edge>,
    pub weight: TPolynomial<E>,
}

impl<E> LatticePath<E> {
    /// Every vertex on the path, endpoints included.
    pub fn vertices(&self) -> impl Iterator<Item = LatticeVertex> + '_ {
        std::iter::once(self.start).chain(self.edges.iter().map(Edge::head))
    }
}

/// Paths `P_i : A_i → B_{σ(i)}`, pairwise vertex-disjoint.
#[derive(Debug, Clone)]
pub struct PathSystem<E> {
    /// `permutation[i] = σ(i)`, 0-based.
    pub permutation: Vec<usize>,
    pub paths: Vec<Arc<LatticePath<E>>>,
    pub sign: i8,
    pub weight: TPolynomial<E>,
}

/// Sign of a permutation given as images of `0..n`.
pub fn permutation_sign(p: &[usize]) -> i8 {
    let inversions = (0..p.len())
        .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| p[i] > p[j])
        .count();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// The `t`-lattice `G_N` restricted to columns `x_min..=x_max`, with edge
/// weights built from a coefficient map and diagonal weights.
pub struct TLattice<'a, F: CoefficientMap> {
    n: usize,
    x_min: i64,
    x_max: i64,
    map: &'a F,
    pr: PolyRing<F::Ring>,
    /// `f(a_x, y)` for `x_min ≤ x < x_max` and `1 ≤ y < N`.
    edge_factors: Vec<Vec<Elem<F>>>,
}

impl<'a, F: CoefficientMap> TLattice<'a, F> {
    /// Needs the diagonal weights `a_x` for `x_min ≤ x < x_max`, the columns
    /// with edges leaving into the window.
    pub fn new(
        n: usize,
        map: &'a F,
        weights: &DiagonalWeightSequence,
        x_min: i64,
        x_max: i64,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("the t-lattice needs N >= 1".into()));
        }
        let mut edge_factors = Vec::new();
        for x in x_min..x_max {
            let a = weights.get(x)?;
            map.check_label(a)?;
            edge_factors.push((1..n).map(|y| map.eval(a, y)).collect::<Result<Vec<_>>>()?);
        }
        Ok(TLattice {
            n,
            x_min,
            x_max,
            map,
            pr: PolyRing::new(map.ring().clone()),
            edge_factors,
        })
    }

    /// The smallest window containing every given vertex.
    pub fn spanning(
        n: usize,
        map: &'a F,
        weights: &DiagonalWeightSequence,
        vertices: &[LatticeVertex],
    ) -> Result<Self> {
        let x_min = vertices.iter().map(|v| v.x).min().unwrap_or(0);
        let x_max = vertices.iter().map(|v| v.x).max().unwrap_or(0);
        if let Some(v) = vertices.iter().find(|v| v.y >= n) {
            return Err(Error::InvalidInput(format!(
                "vertex {v:?} lies above height N-1 = {}",
                n - 1
            )));
        }
        TLattice::new(n, map, weights, x_min, x_max)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn map(&self) -> &F {
        self.map
    }

    pub fn poly_ring(&self) -> &PolyRing<F::Ring> {
        &self.pr
    }

    fn in_window(&self, v: LatticeVertex) -> bool {
        v.x >= self.x_min && v.x <= self.x_max && v.y < self.n
    }

    fn factor(&self, x: i64, y: usize) -> &Elem<F> {
        &self.edge_factors[(x - self.x_min) as usize][y - 1]
    }

    /// Edges leaving `v` that stay inside the window.
    pub fn out_edges(&self, v: LatticeVertex) -> Vec<Edge> {
        if v.y == 0 || !self.in_window(v) {
            return Vec::new();
        }
        EdgeKind::ALL
            .iter()
            .filter(|k| k.tail_color() == v.color)
            .map(|&kind| Edge {
                kind,
                x: v.x,
                y: v.y,
            })
            .filter(|e| self.in_window(e.head()))
            .collect()
    }

    pub fn edge_weight(&self, e: &Edge) -> Poly<F> {
        if !e.kind.has_f() {
            return self.pr.one();
        }
        let c = self.factor(e.x, e.y).clone();
        self.pr.monomial(c, usize::from(e.kind.has_t()))
    }

    /// Product of edge weights along an edge list.
    pub fn weight_of(&self, edges: &[Edge]) -> Poly<F> {
        edges.iter().fold(self.pr.one(), |acc, e| {
            self.pr.mul(&acc, &self.edge_weight(e))
        })
    }

    /// `w(A, B) = Σ_{P : A → B} w(P)`, by a forward sweep over the vertices
    /// between `A` and `B` in topological order (height descending, then
    /// column ascending, white before black).
    pub fn path_weight_sum(&self, a: LatticeVertex, b: LatticeVertex) -> Poly<F> {
        if !self.in_window(a) || !self.in_window(b) || b.x < a.x || b.y > a.y {
            return self.pr.zero();
        }
        let width = (b.x - a.x + 1) as usize;
        let height = a.y - b.y + 1;
        let slot = |v: LatticeVertex| {
            let row = a.y - v.y;
            let col = (v.x - a.x) as usize;
            (row * width + col) * 2 + usize::from(v.color == Color::Black)
        };
        let mut acc = vec![self.pr.zero(); width * height * 2];
        acc[slot(a)] = self.pr.one();
        for row in 0..height {
            let y = a.y - row;
            for col in 0..width {
                let x = a.x + col as i64;
                // black after white: an Enter edge at this column lands on a
                // black vertex one column right, never on the same column
                for v in [LatticeVertex::white(x, y), LatticeVertex::black(x, y)] {
                    let here = acc[slot(v)].clone();
                    if here.is_zero() || v == b {
                        continue;
                    }
                    for e in self.out_edges(v) {
                        let h = e.head();
                        if h.x > b.x || h.y < b.y {
                            continue;
                        }
                        let add = self.pr.mul(&here, &self.edge_weight(&e));
                        let k = slot(h);
                        acc[k] = self.pr.add(&acc[k], &add);
                    }
                }
            }
        }
        acc[slot(b)].clone()
    }

    /// Every path from `a` to `b`, depth first.
    pub fn enumerate_paths(&self, a: LatticeVertex, b: LatticeVertex) -> Vec<LatticePath<Elem<F>>> {
        let mut out = Vec::new();
        if !self.in_window(a) || !self.in_window(b) {
            return out;
        }
        let mut edges = Vec::new();
        self.paths_from(a, b, &mut edges, &mut out);
        out
    }

    fn paths_from(
        &self,
        v: LatticeVertex,
        b: LatticeVertex,
        edges: &mut Vec<Edge>,
        out: &mut Vec<LatticePath<Elem<F>>>,
    ) {
        if v == b {
            let start = edges.first().map_or(b, Edge::tail);
            out.push(LatticePath {
                start,
                end: b,
                edges: edges.clone(),
                weight: self.weight_of(edges),
            });
            return;
        }
        for e in self.out_edges(v) {
            let h = e.head();
            if h.x > b.x || h.y < b.y {
                continue;
            }
            edges.push(e);
            self.paths_from(h, b, edges, out);
            edges.pop();
        }
    }

    /// Every vertex-disjoint path system from `sources` to `sinks`, over
    /// every permutation; each system appears once.
    pub fn enumerate_path_systems(
        &self,
        sources: &[LatticeVertex],
        sinks: &[LatticeVertex],
    ) -> Result<Vec<PathSystem<Elem<F>>>> {
        if sources.len() != sinks.len() {
            return Err(Error::InvalidInput(format!(
                "{} sources but {} sinks",
                sources.len(),
                sinks.len()
            )));
        }
        let n = sources.len();
        let table: PathTable<Elem<F>> = sources
            .iter()
            .map(|&a| {
                sinks
                    .iter()
                    .map(|&b| {
                        self.enumerate_paths(a, b)
                            .into_iter()
                            .map(Arc::new)
                            .collect()
                    })
                    .collect()
            })
            .collect();

        struct Search<'t, E> {
            table: &'t PathTable<E>,
            used_sinks: Vec<bool>,
            used_vertices: HashSet<LatticeVertex>,
            perm: Vec<usize>,
            chosen: Vec<Arc<LatticePath<E>>>,
            found: Vec<Choice<E>>,
        }

        impl<E> Search<'_, E> {
            fn run(&mut self, i: usize) {
                if i == self.table.len() {
                    self.found.push((self.perm.clone(), self.chosen.clone()));
                    return;
                }
                for j in 0..self.used_sinks.len() {
                    if self.used_sinks[j] {
                        continue;
                    }
                    for path in &self.table[i][j] {
                        if path.vertices().any(|v| self.used_vertices.contains(&v)) {
                            continue;
                        }
                        self.used_sinks[j] = true;
                        self.used_vertices.extend(path.vertices());
                        self.perm.push(j);
                        self.chosen.push(path.clone());
                        self.run(i + 1);
                        self.chosen.pop();
                        self.perm.pop();
                        for v in path.vertices() {
                            self.used_vertices.remove(&v);
                        }
                        self.used_sinks[j] = false;
                    }
                }
            }
        }

        let mut search = Search {
            table: &table,
            used_sinks: vec![false; n],
            used_vertices: HashSet::new(),
            perm: Vec::with_capacity(n),
            chosen: Vec::with_capacity(n),
            found: Vec::new(),
        };
        search.run(0);

        Ok(search
            .found
            .into_iter()
            .map(|(permutation, paths)| {
                let weight = paths
                    .iter()
                    .fold(self.pr.one(), |acc, p| self.pr.mul(&acc, &p.weight));
                let sign = permutation_sign(&permutation);
                PathSystem {
                    permutation,
                    paths,
                    sign,
                    weight,
                }
            })
            .collect())
    }

    /// `Σ_P sign(P)·w(P)` over all vertex-disjoint path systems.
    pub fn lgv_signed_sum(
        &self,
        sources: &[LatticeVertex],
        sinks: &[LatticeVertex],
    ) -> Result<Poly<F>> {
        let systems = self.enumerate_path_systems(sources, sinks)?;
        Ok(systems.iter().fold(self.pr.zero(), |acc, s| {
            if s.sign > 0 {
                self.pr.add(&acc, &s.weight)
            } else {
                self.pr.sub(&acc, &s.weight)
            }
        }))
    }

    /// The matrix `(w(A_i, B_j))`.
    pub fn weight_matrix(
        &self,
        sources: &[LatticeVertex],
        sinks: &[LatticeVertex],
    ) -> Result<Matrix<Poly<F>>> {
        if sources.len() != sinks.len() {
            return Err(Error::Shape(format!(
                "{} sources but {} sinks",
                sources.len(),
                sinks.len()
            )));
        }
        Ok(Matrix::from_fn(sources.len(), |i, j| {
            self.path_weight_sum(sources[i], sinks[j])
        }))
    }

    /// `det(w(A_i, B_j))`.
    pub fn lgv_determinant(
        &self,
        sources: &[LatticeVertex],
        sinks: &[LatticeVertex],
    ) -> Result<Poly<F>> {
        ring_determinant(&self.pr, &self.weight_matrix(sources, sinks)?)
    }
}

/// `w(A, B)` on `G_N`.
pub fn path_weight_sum<F: CoefficientMap>(
    a: LatticeVertex,
    b: LatticeVertex,
    n: usize,
    f: &F,
    weights: &DiagonalWeightSequence,
) -> Result<Poly<F>> {
    if b.x < a.x {
        return Ok(PolyRing::new(f.ring().clone()).zero());
    }
    let lattice = TLattice::spanning(n, f, weights, &[a, b])?;
    Ok(lattice.path_weight_sum(a, b))
}

/// Sources `A_j = ∘(j − λ′_j, N−1)` and sinks `B_j = ∘(j, 0)`, `1 ≤ j ≤ λ₁`.
pub fn schur_scenario(shape: &Partition, n: usize) -> (Vec<LatticeVertex>, Vec<LatticeVertex>) {
    let cols = shape.conjugate();
    let top = n.saturating_sub(1);
    let sources =
        (1..=shape.width()).map(|j| LatticeVertex::white(j as i64 - cols.part(j) as i64, top));
    let sinks = (1..=shape.width()).map(|j| LatticeVertex::white(j as i64, 0));
    (sources.collect(), sinks.collect())
}

/// Sources `A_j = ∘(j − λ′_j, M)` and sinks `B_j = ∘(j − b_j, M−1)`.
pub fn single_layer_scenario(
    shape: &Partition,
    b: &[usize],
    m: usize,
) -> (Vec<LatticeVertex>, Vec<LatticeVertex>) {
    let cols = shape.conjugate();
    let sources =
        (1..=shape.width()).map(|j| LatticeVertex::white(j as i64 - cols.part(j) as i64, m));
    let sinks = (1..=b.len()).map(|j| LatticeVertex::white(j as i64 - b[j - 1] as i64, m - 1));
    (sources.collect(), sinks.collect())
}

/// Signed path-system sum for the Schur scenario of `λ` on `G_N`.
pub fn schur_scenario_sum<F: CoefficientMap>(
    shape: &Partition,
    n: usize,
    f: &F,
    weights: &DiagonalWeightSequence,
) -> Result<Poly<F>> {
    let (sources, sinks) = schur_scenario(shape, n);
    let all: Vec<_> = sources.iter().chain(&sinks).copied().collect();
    let lattice = TLattice::spanning(n, f, weights, &all)?;
    lattice.lgv_signed_sum(&sources, &sinks)
}

/// Both sides of the single-layer identity for `(λ, b, M)`.
#[derive(Debug, Clone)]
pub struct SingleLayerReport<E> {
    pub stats: BitStats,
    pub signed_sum: TPolynomial<E>,
    pub predicted: TPolynomial<E>,
    pub equal: bool,
}

/// Compares the signed path-system sum from `∘(j − λ′_j, M)` to
/// `∘(j − b_j, M−1)` against the closed form read off `F(λ, b)`:
/// `Π_{f_{i,j}=1} f(a_{j−i}, M) · t^{v₁}(1−t)^{h₁}` when `F(λ, b)` is
/// 1-ordered, and 0 otherwise.
pub fn lemma45_check<F: CoefficientMap>(
    shape: &Partition,
    b: &[usize],
    m: usize,
    f: &F,
    weights: &DiagonalWeightSequence,
) -> Result<SingleLayerReport<Elem<F>>> {
    if m == 0 {
        return Err(Error::InvalidInput("M must be at least 1".into()));
    }
    let bits = build_bit_tableau(shape, b)?;
    let stats = bits.stats();
    let n = m + 1;
    let (sources, sinks) = single_layer_scenario(shape, b, m);
    let all: Vec<_> = sources.iter().chain(&sinks).copied().collect();
    let lattice = TLattice::spanning(n, f, weights, &all)?;
    let pr = lattice.poly_ring().clone();
    let signed_sum = lattice.lgv_signed_sum(&sources, &sinks)?;

    let predicted = if stats.one_ordered {
        let ring = f.ring();
        let mut coeff = ring.one();
        for (cell, &bit) in bits.tableau.iter() {
            if bit {
                coeff = ring.mul(&coeff, &f.eval(weights.get(cell.content())?, m)?);
            }
        }
        pr.scale(&pr.t_one_minus_t_power(stats.v1, stats.h1), &coeff)
    } else {
        pr.zero()
    };
    let equal = pr.eq(&signed_sum, &predicted);
    Ok(SingleLayerReport {
        stats,
        signed_sum,
        predicted,
        equal,
    })
}
