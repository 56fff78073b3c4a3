//! Resolution graphs, their intersection lattice and the basic cycles living on it.
//!
//! A [`ResolutionGraph`] is validated eagerly: it must be nonempty, connected,
//! free of self-loops and its intersection form must be negative definite.
//! Everything downstream relies on these invariants (in particular on the
//! invertibility of the form and on the strict positivity of the dual cycles).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, int, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertex {
    pub id: String,
    pub euler: i64,
    pub genus: u32,
}

impl Vertex {
    pub fn new(id: impl Into<String>, euler: i64, genus: u32) -> Self {
        Vertex {
            id: id.into(),
            euler,
            genus,
        }
    }
}

/// Integer intersection matrix: `e_i` on the diagonal, edge counts off it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionForm {
    matrix: Vec<Vec<i64>>,
}

impl IntersectionForm {
    /// Builds the form of a decorated multigraph. Fails on an empty or
    /// disconnected graph and on self-loops; definiteness is *not* checked here.
    pub fn build(vertices: &[Vertex], edges: &[(usize, usize)]) -> Result<Self> {
        let n = vertices.len();
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut matrix = vec![vec![0i64; n]; n];
        for (i, v) in vertices.iter().enumerate() {
            matrix[i][i] = v.euler;
        }
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::UnknownVertex(format!("#{}", a.max(b))));
            }
            if a == b {
                return Err(Error::SelfLoop(vertices[a].id.clone()));
            }
            matrix[a][b] += 1;
            matrix[b][a] += 1;
        }

        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for w in 0..n {
                if w != v && matrix[v][w] > 0 && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        if let Some(w) = seen.iter().position(|s| !s) {
            return Err(Error::Disconnected(vertices[w].id.clone()));
        }
        Ok(IntersectionForm { matrix })
    }

    /// Wraps a raw symmetric matrix, mainly for testing the definiteness check.
    pub fn from_matrix(matrix: Vec<Vec<i64>>) -> Self {
        let n = matrix.len();
        assert!(matrix.iter().all(|r| r.len() == n), "matrix must be square");
        for i in 0..n {
            for j in 0..n {
                assert_eq!(matrix[i][j], matrix[j][i], "matrix must be symmetric");
            }
        }
        IntersectionForm { matrix }
    }

    pub fn dim(&self) -> usize {
        self.matrix.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.matrix[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    /// Leading principal minors `d_1, ..., d_n` by Bareiss fraction-free
    /// elimination. Stops early (with a trailing zero) if a minor vanishes.
    pub fn leading_minors(&self) -> Vec<BigInt> {
        let n = self.dim();
        let mut m: Vec<Vec<BigInt>> = self
            .matrix
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        let mut minors = Vec::with_capacity(n);
        let mut prev = BigInt::one();
        for k in 0..n {
            let pivot = m[k][k].clone();
            minors.push(pivot.clone());
            if pivot.is_zero() {
                break;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&m[i][j] * &pivot - &m[i][k] * &m[k][j]) / &prev;
                    m[i][j] = v;
                }
            }
            prev = pivot;
        }
        minors
    }

    /// `(-1)^k d_k > 0` for every leading principal minor.
    pub fn is_negative_definite(&self) -> bool {
        let minors = self.leading_minors();
        minors.len() == self.dim()
            && minors.iter().enumerate().all(|(k, d)| {
                if k % 2 == 0 {
                    d.is_negative()
                } else {
                    d.is_positive()
                }
            })
    }

    pub fn determinant(&self) -> BigInt {
        let minors = self.leading_minors();
        if minors.len() < self.dim() {
            BigInt::zero()
        } else {
            minors.last().cloned().unwrap_or_else(BigInt::one)
        }
    }

    /// Exact inverse by Gauss-Jordan elimination with row pivoting.
    fn inverse(&self) -> Option<Vec<Vec<Rational>>> {
        let n = self.dim();
        let mut a: Vec<Vec<Rational>> = self
            .matrix
            .iter()
            .map(|r| r.iter().map(|&x| int(x)).collect())
            .collect();
        let mut inv: Vec<Vec<Rational>> = (0..n)
            .map(|i| (0..n).map(|j| int((i == j) as i64)).collect())
            .collect();
        for col in 0..n {
            let p = (col..n).find(|&r| !a[r][col].is_zero())?;
            a.swap(col, p);
            inv.swap(col, p);
            let pivot = a[col][col].clone();
            for j in 0..n {
                a[col][j] = &a[col][j] / &pivot;
                inv[col][j] = &inv[col][j] / &pivot;
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let factor = a[r][col].clone();
                for j in 0..n {
                    let t = &factor * &a[col][j];
                    a[r][j] -= t;
                    let t = &factor * &inv[col][j];
                    inv[r][j] -= t;
                }
            }
        }
        Some(inv)
    }
}

/// A rational cycle `sum_i x_i E_i`, coefficients indexed by vertex position.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QCycle(Vec<Rational>);

impl QCycle {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        QCycle(coeffs)
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        QCycle(coeffs.iter().map(|&x| int(x)).collect())
    }

    pub fn zero(n: usize) -> Self {
        QCycle(vec![Rational::zero(); n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut c = Self::zero(n);
        c.0[i] = Rational::one();
        c
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn get(&self, i: usize) -> &Rational {
        &self.0[i]
    }

    pub fn set(&mut self, i: usize, value: Rational) {
        self.0[i] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(rational::is_integer)
    }

    pub fn floor(&self) -> QCycle {
        QCycle(self.0.iter().map(Rational::floor).collect())
    }

    pub fn frac(&self) -> QCycle {
        QCycle(self.0.iter().map(rational::frac).collect())
    }

    /// Componentwise `self >= other`.
    pub fn ge(&self, other: &QCycle) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }

    /// Indices with nonzero coefficient.
    pub fn support(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| !self.0[i].is_zero()).collect()
    }

    /// Smallest positive integer `r` with `r * self` integral.
    pub fn denominator(&self) -> BigInt {
        rational::lcm_of_denominators(&self.0)
    }

    pub fn scale(&self, k: &Rational) -> QCycle {
        QCycle(self.0.iter().map(|x| x * k).collect())
    }

    /// Integer coefficients; `None` unless the cycle is integral and fits.
    pub fn to_integers(&self) -> Option<Vec<i64>> {
        use num_traits::ToPrimitive;
        self.0
            .iter()
            .map(|x| {
                if x.is_integer() {
                    x.to_integer().to_i64()
                } else {
                    None
                }
            })
            .collect()
    }

    fn check_len(&self, other: &QCycle) {
        assert_eq!(self.len(), other.len(), "cycle dimension mismatch");
    }
}

pub fn floor_cycle(l: &QCycle) -> QCycle {
    l.floor()
}

pub fn frac_cycle(l: &QCycle) -> QCycle {
    l.frac()
}

impl Add for &QCycle {
    type Output = QCycle;
    fn add(self, rhs: &QCycle) -> QCycle {
        self.check_len(rhs);
        QCycle(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &QCycle {
    type Output = QCycle;
    fn sub(self, rhs: &QCycle) -> QCycle {
        self.check_len(rhs);
        QCycle(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &QCycle {
    type Output = QCycle;
    fn neg(self) -> QCycle {
        QCycle(self.0.iter().map(|a| -a).collect())
    }
}

impl Mul<&QCycle> for &Rational {
    type Output = QCycle;
    fn mul(self, rhs: &QCycle) -> QCycle {
        rhs.scale(self)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for QCycle {
            type Output = QCycle;
            fn $m(self, rhs: QCycle) -> QCycle {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&QCycle> for QCycle {
            type Output = QCycle;
            fn $m(self, rhs: &QCycle) -> QCycle {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);

impl Neg for QCycle {
    type Output = QCycle;
    fn neg(self) -> QCycle {
        -&self
    }
}

impl fmt::Display for QCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", rational::render(x))?;
        }
        write!(f, ")")
    }
}

/// A validated resolution graph with its form, inverse and anticanonical cycle.
#[derive(Debug, Clone)]
pub struct ResolutionGraph {
    vertices: Vec<Vertex>,
    edges: Vec<(usize, usize)>,
    form: IntersectionForm,
    inverse: Vec<Vec<Rational>>,
    canonical: QCycle,
}

impl PartialEq for ResolutionGraph {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.edges == other.edges
    }
}

impl ResolutionGraph {
    pub fn new(vertices: Vec<Vertex>, edges: Vec<(usize, usize)>) -> Result<Self> {
        for (i, v) in vertices.iter().enumerate() {
            if vertices[..i].iter().any(|w| w.id == v.id) {
                return Err(Error::DuplicateVertex(v.id.clone()));
            }
        }
        let form = IntersectionForm::build(&vertices, &edges)?;
        if !form.is_negative_definite() {
            let nonneg: Vec<_> = vertices
                .iter()
                .filter(|v| v.euler >= 0)
                .map(|v| format!("`{}` (euler={})", v.id, v.euler))
                .collect();
            let hint = if nonneg.is_empty() {
                String::new()
            } else {
                format!("; nonnegative Euler numbers at {}", nonneg.join(", "))
            };
            return Err(Error::NotNegativeDefinite { hint });
        }
        let inverse = form
            .inverse()
            .expect("negative definite forms are invertible");
        let n = vertices.len();
        // adjunction: (Z_K, E_i) = e_i + 2 - 2 g_i
        let rhs: Vec<Rational> = vertices
            .iter()
            .map(|v| int(v.euler + 2 - 2 * v.genus as i64))
            .collect();
        let canonical = QCycle(
            (0..n)
                .map(|i| (0..n).map(|j| &inverse[i][j] * &rhs[j]).sum())
                .collect(),
        );
        Ok(ResolutionGraph {
            vertices,
            edges,
            form,
            inverse,
            canonical,
        })
    }

    /// Convenience constructor from `(id, euler, genus)` triples and id pairs.
    pub fn from_parts(vertices: &[(&str, i64, u32)], edges: &[(&str, &str)]) -> Result<Self> {
        let vs: Vec<Vertex> = vertices
            .iter()
            .map(|&(id, e, g)| Vertex::new(id, e, g))
            .collect();
        let find = |id: &str| {
            vs.iter()
                .position(|v| v.id == id)
                .ok_or_else(|| Error::UnknownVertex(id.to_string()))
        };
        let es = edges
            .iter()
            .map(|&(a, b)| Ok((find(a)?, find(b)?)))
            .collect::<Result<Vec<_>>>()?;
        ResolutionGraph::new(vs, es)
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> &Vertex {
        &self.vertices[i]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn form(&self) -> &IntersectionForm {
        &self.form
    }

    pub fn index_of(&self, id: &str) -> Result<usize> {
        self.vertices
            .iter()
            .position(|v| v.id == id)
            .ok_or_else(|| Error::UnknownVertex(id.to_string()))
    }

    /// `g = sum_i g_i`.
    pub fn total_genus(&self) -> u64 {
        self.vertices.iter().map(|v| v.genus as u64).sum()
    }

    /// First Betti number `h` of the (connected) graph.
    pub fn first_betti(&self) -> u64 {
        (self.edges.len() + 1 - self.vertices.len()) as u64
    }

    pub fn is_tree(&self) -> bool {
        self.first_betti() == 0
    }

    /// Valency counting multi-edges with multiplicity.
    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    /// Neighbours of `v`, repeated according to edge multiplicity.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges.iter().filter_map(move |&(a, b)| {
            if a == v {
                Some(b)
            } else if b == v {
                Some(a)
            } else {
                None
            }
        })
    }

    /// `|det I|`, the order of `L'/L`.
    pub fn determinant_abs(&self) -> BigInt {
        self.form.determinant().abs()
    }

    pub fn zero_cycle(&self) -> QCycle {
        QCycle::zero(self.len())
    }

    /// The base element `E_v`.
    pub fn unit_cycle(&self, v: usize) -> QCycle {
        QCycle::unit(self.len(), v)
    }

    /// The reduced exceptional cycle `E = sum_i E_i`.
    pub fn reduced_cycle(&self) -> QCycle {
        QCycle(vec![Rational::one(); self.len()])
    }

    fn check(&self, l: &QCycle) -> Result<()> {
        if l.len() != self.len() {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                got: l.len(),
            });
        }
        Ok(())
    }

    /// `(l, E_v)`.
    pub fn pairing_with_vertex(&self, l: &QCycle, v: usize) -> Rational {
        let row = &self.form.rows()[v];
        l.coeffs()
            .iter()
            .zip(row)
            .filter(|(_, &m)| m != 0)
            .map(|(x, &m)| x * int(m))
            .sum()
    }

    /// `a^T I b`, exact.
    pub fn pairing(&self, a: &QCycle, b: &QCycle) -> Result<Rational> {
        self.check(a)?;
        self.check(b)?;
        let mut total = Rational::zero();
        for (i, x) in a.coeffs().iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            total += x * self.pairing_with_vertex(b, i);
        }
        Ok(total)
    }

    /// The anticanonical cycle `Z_K`, solving the adjunction equations.
    pub fn canonical_cycle(&self) -> &QCycle {
        &self.canonical
    }

    /// `E*_v`, determined by `(E*_v, E_w) = -delta_vw`.
    pub fn dual_cycle(&self, v: usize) -> QCycle {
        QCycle((0..self.len()).map(|i| -&self.inverse[i][v]).collect())
    }

    pub fn dual_cycle_by_id(&self, id: &str) -> Result<QCycle> {
        Ok(self.dual_cycle(self.index_of(id)?))
    }

    /// Solves `I x = rhs` exactly.
    pub fn solve(&self, rhs: &[Rational]) -> Result<QCycle> {
        if rhs.len() != self.len() {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                got: rhs.len(),
            });
        }
        let n = self.len();
        Ok(QCycle(
            (0..n)
                .map(|i| (0..n).map(|j| &self.inverse[i][j] * &rhs[j]).sum())
                .collect(),
        ))
    }

    /// Riemann-Roch expression `chi(l) = (Z_K - l, l) / 2`.
    pub fn chi(&self, l: &QCycle) -> Result<Rational> {
        self.check(l)?;
        let diff = &self.canonical - l;
        Ok(self.pairing(&diff, l)? / int(2))
    }

    /// Lipman cone membership: `(l, E_i) <= 0` for all `i`.
    pub fn is_antinef(&self, l: &QCycle) -> Result<bool> {
        self.check(l)?;
        Ok((0..self.len()).all(|i| !self.pairing_with_vertex(l, i).is_positive()))
    }

    /// Like [`is_antinef`](Self::is_antinef) but reports the offending vertex.
    pub fn check_antinef(&self, l: &QCycle) -> Result<()> {
        self.check(l)?;
        for i in 0..self.len() {
            let p = self.pairing_with_vertex(l, i);
            if p.is_positive() {
                return Err(Error::NotAntinef {
                    vertex: self.vertices[i].id.clone(),
                    value: rational::render(&p),
                });
            }
        }
        Ok(())
    }

    /// Smallest integral antinef cycle `>= x`, by Laufer's algorithm: while
    /// some `(l, E_i) > 0`, add `E_i`. With `x = E` this is Artin's
    /// fundamental cycle.
    pub fn antinef_closure(&self, x: &QCycle) -> Result<QCycle> {
        self.check(x)?;
        let mut l = x.clone();
        if !l.is_integral() {
            return Err(Error::NotIntegral);
        }
        while let Some(i) = (0..self.len()).find(|&i| self.pairing_with_vertex(&l, i).is_positive())
        {
            let next = l.get(i) + Rational::one();
            l.set(i, next);
        }
        Ok(l)
    }

    /// `id=value` pairs in vertex order, e.g. `E1=3 E2=2 E3=1`.
    pub fn render_cycle(&self, l: &QCycle) -> String {
        self.vertices
            .iter()
            .zip(l.coeffs())
            .map(|(v, x)| format!("{}={}", v.id, rational::render(x)))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::rational::rat;

    #[test]
    fn form_of_single_vertex() {
        let g = ResolutionGraph::from_parts(&[("a", -2, 0)], &[]).unwrap();
        assert_eq!(g.form().rows(), &[vec![-2]]);
    }

    #[test]
    fn form_of_laufer_chain() {
        let g = catalog::elliptic_chain();
        assert_eq!(
            g.form().rows(),
            &[vec![-1, 1, 0], vec![1, -2, 1], vec![0, 1, -2]]
        );
    }

    #[test]
    fn form_counts_multi_edges() {
        let g =
            ResolutionGraph::from_parts(&[("a", -3, 0), ("b", -3, 0)], &[("a", "b"), ("a", "b")])
                .unwrap();
        assert_eq!(g.form().rows(), &[vec![-3, 2], vec![2, -3]]);
        assert_eq!(g.first_betti(), 1);
    }

    #[test]
    fn structural_errors() {
        let v = vec![Vertex::new("a", -2, 0), Vertex::new("b", -2, 0)];
        assert_eq!(
            IntersectionForm::build(&v, &[(0, 0)]),
            Err(Error::SelfLoop("a".into()))
        );
        assert_eq!(
            IntersectionForm::build(&v, &[]),
            Err(Error::Disconnected("b".into()))
        );
        assert_eq!(IntersectionForm::build(&[], &[]), Err(Error::EmptyGraph));
        assert!(matches!(
            ResolutionGraph::from_parts(&[("a", 1, 0)], &[]),
            Err(Error::NotNegativeDefinite { .. })
        ));
    }

    #[test]
    fn definiteness() {
        assert!(IntersectionForm::from_matrix(vec![vec![-2]]).is_negative_definite());
        assert!(
            !IntersectionForm::from_matrix(vec![vec![-1, 2], vec![2, -1]]).is_negative_definite()
        );
        // minors of the Laufer chain: -1, 1, -1, i.e. (-1)^k d_k = 1, 1, 1
        let f = catalog::elliptic_chain().form().clone();
        let minors: Vec<i64> = f
            .leading_minors()
            .iter()
            .map(|d| d.try_into().unwrap())
            .collect();
        assert_eq!(minors, vec![-1, 1, -1]);
        assert!(f.is_negative_definite());
    }

    #[test]
    fn canonical_cycles() {
        let g = ResolutionGraph::from_parts(&[("a", -2, 0)], &[]).unwrap();
        assert!(g.canonical_cycle().is_zero());
        let g = catalog::elliptic_chain();
        assert_eq!(g.canonical_cycle(), &QCycle::from_integers(&[3, 2, 1]));
    }

    #[test]
    fn canonical_cycle_of_rational_example_satisfies_adjunction() {
        let g = catalog::rational_arrow_graph();
        let zk = g.canonical_cycle();
        assert_eq!(
            zk,
            &QCycle::new(vec![
                rat(1, 2),
                int(1),
                rat(3, 2),
                int(2),
                int(1),
                rat(3, 2),
                rat(3, 4),
                rat(3, 4)
            ])
        );
        for (i, v) in g.vertices().iter().enumerate() {
            let lhs = g.pairing(zk, &g.unit_cycle(i)).unwrap();
            assert_eq!(lhs, int(v.euler + 2 - 2 * v.genus as i64));
        }
        assert_eq!(zk.floor(), QCycle::from_integers(&[0, 1, 1, 2, 1, 1, 0, 0]));
    }

    #[test]
    fn dual_cycles() {
        let g = ResolutionGraph::from_parts(&[("a", -2, 0)], &[]).unwrap();
        assert_eq!(g.dual_cycle(0), QCycle::new(vec![rat(1, 2)]));
        let g = catalog::elliptic_chain();
        assert_eq!(g.dual_cycle(2), QCycle::from_integers(&[1, 1, 1]));
        assert_eq!(g.dual_cycle(0), QCycle::from_integers(&[3, 2, 1]));
        for i in 0..3 {
            for j in 0..3 {
                let p = g.pairing(&g.dual_cycle(i), &g.unit_cycle(j)).unwrap();
                assert_eq!(p, int(-((i == j) as i64)));
            }
        }
        assert!(g.dual_cycle_by_id("nope").is_err());
    }

    #[test]
    fn pairing_and_chi() {
        let g = catalog::elliptic_chain();
        let zk = g.canonical_cycle().clone();
        assert_eq!(g.pairing(&zk, &g.unit_cycle(0)).unwrap(), int(-1));
        let zero = g.zero_cycle();
        assert_eq!(g.pairing(&zero, &zk).unwrap(), int(0));
        assert_eq!(g.chi(&zero).unwrap(), int(0));
        assert_eq!(g.chi(&zk).unwrap(), int(0));
        // chi(E) = 1 - g - h
        assert_eq!(g.chi(&g.reduced_cycle()).unwrap(), int(0));
        assert!(g.pairing(&QCycle::zero(2), &zk).is_err());
    }

    #[test]
    fn antinef() {
        let g = catalog::elliptic_chain();
        assert!(g.is_antinef(&g.zero_cycle()).unwrap());
        for i in 0..3 {
            assert!(g.is_antinef(&g.dual_cycle(i)).unwrap());
        }
        assert!(!g.is_antinef(&g.unit_cycle(0)).unwrap());
        assert!(matches!(
            g.check_antinef(&g.unit_cycle(0)),
            Err(Error::NotAntinef { .. })
        ));
    }

    #[test]
    fn floor_and_frac() {
        let l = QCycle::new(vec![rat(3, 2), rat(-1, 4)]);
        assert_eq!(floor_cycle(&l), QCycle::from_integers(&[1, -1]));
        assert_eq!(frac_cycle(&l), QCycle::new(vec![rat(1, 2), rat(3, 4)]));
        let i = QCycle::from_integers(&[4, -7]);
        assert!(frac_cycle(&i).is_zero());
    }
}
