//! Completed graphs (arrows and multiplicities), the topological spectrum
//! `TSp^beta`, the closed-form Hodge spectrum on `[0, 1]` and A'Campo's
//! monodromy zeta function.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::formal::JumpSpectrum;
use crate::lattice::{QCycle, ResolutionGraph};
use crate::rational::{frac, int, rat, to_i64, Rational};

/// A resolution graph decorated with vertex multiplicities `m_v` and
/// arrowheads of multiplicity one.
#[derive(Debug, Clone, PartialEq)]
pub struct CompletedGraph {
    base: ResolutionGraph,
    mult: Vec<i64>,
    arrows: Vec<i64>,
}

impl CompletedGraph {
    /// Multiplicities from the coefficients of `F`, `-(E_v, F)` arrows at `v`.
    pub fn from_cycle(base: ResolutionGraph, f: &QCycle) -> Result<Self> {
        if f.len() != base.len() {
            return Err(Error::DimensionMismatch {
                expected: base.len(),
                got: f.len(),
            });
        }
        if f.is_zero() {
            return Err(Error::ZeroCycle);
        }
        let mult = f.to_integers().ok_or(Error::NotIntegral)?;
        base.check_antinef(f)?;
        let arrows = (0..base.len())
            .map(|v| -to_i64(&base.pairing_with_vertex(f, v)))
            .collect();
        Ok(CompletedGraph { base, mult, arrows })
    }

    /// Explicit decorations; every multiplicity must be positive.
    pub fn new(base: ResolutionGraph, mult: Vec<i64>, arrows: Vec<i64>) -> Result<Self> {
        for got in [mult.len(), arrows.len()] {
            if got != base.len() {
                return Err(Error::DimensionMismatch {
                    expected: base.len(),
                    got,
                });
            }
        }
        if mult.iter().any(|&m| m < 1) {
            return Err(Error::precondition("vertex multiplicities must be >= 1"));
        }
        if arrows.iter().any(|&a| a < 0) {
            return Err(Error::precondition("arrow counts must be >= 0"));
        }
        Ok(CompletedGraph { base, mult, arrows })
    }

    pub fn base(&self) -> &ResolutionGraph {
        &self.base
    }

    pub fn mult(&self, v: usize) -> i64 {
        self.mult[v]
    }

    pub fn arrows(&self, v: usize) -> i64 {
        self.arrows[v]
    }

    pub fn total_arrows(&self) -> i64 {
        self.arrows.iter().sum()
    }

    /// `#W_v`: neighbours counted with edge multiplicity, plus arrows.
    pub fn valency(&self, v: usize) -> i64 {
        self.base.degree(v) as i64 + self.arrows[v]
    }

    pub fn edge_mult(&self, v: usize, w: usize) -> i64 {
        self.mult[v].gcd(&self.mult[w])
    }
}

/// Shifts `beta_v in [0, 1)` per vertex; arrows carry `beta = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BetaAssignment(Vec<Rational>);

impl BetaAssignment {
    pub fn new(values: Vec<Rational>) -> Result<Self> {
        if values
            .iter()
            .any(|b| b.is_negative() || b >= &Rational::one())
        {
            return Err(Error::precondition("beta values must lie in [0, 1)"));
        }
        Ok(BetaAssignment(values))
    }

    pub fn zero(n: usize) -> Self {
        BetaAssignment(vec![Rational::zero(); n])
    }

    /// `beta_v = {-k_v}`.
    pub fn from_canonical(g: &ResolutionGraph) -> Self {
        BetaAssignment(
            g.canonical_cycle()
                .coeffs()
                .iter()
                .map(|k| frac(&-k))
                .collect(),
        )
    }

    pub fn get(&self, v: usize) -> &Rational {
        &self.0[v]
    }
}

pub fn complete_graph(g: &ResolutionGraph, f: &QCycle) -> Result<CompletedGraph> {
    CompletedGraph::from_cycle(g.clone(), f)
}

/// Exponents contributed by the edge `v - w`: the unique `gamma in [0, 1)`
/// with `{m_v gamma / m_e} = beta_v` and `{m_w gamma / m_e} = beta_w`, if any,
/// gives `(gamma + s) / m_e` for `s = 0..m_e`.
pub fn edge_exponents(
    cg: &CompletedGraph,
    beta: &BetaAssignment,
    v: usize,
    w: usize,
) -> Vec<Rational> {
    let (mv, mw) = (cg.mult(v), cg.mult(w));
    let me = cg.edge_mult(v, w);
    let (bv, bw) = (beta.get(v), beta.get(w));
    // m_v gamma / m_e = beta_v + j, and gamma < 1 forces j < m_v / m_e
    let gamma = (0..mv / me)
        .map(|j| (bv + int(j)) * rat(me, mv))
        .find(|g| &frac(&(g * rat(mw, me))) == bw);
    match gamma {
        Some(g) => (0..me).map(|s| (&g + int(s)) / int(me)).collect(),
        None => Vec::new(),
    }
}

/// The other side of the edge criterion: all `c in [0, 1)` with
/// `(beta_v + s_v) / m_v = (beta_w + s_w) / m_w = c` for some
/// `0 <= s_v < m_v`, `0 <= s_w < m_w`. Brute force over all pairs.
pub fn edge_exponents_brute_force(
    cg: &CompletedGraph,
    beta: &BetaAssignment,
    v: usize,
    w: usize,
) -> Vec<Rational> {
    let (mv, mw) = (cg.mult(v), cg.mult(w));
    let mut out = Vec::new();
    for sv in 0..mv {
        let c = (beta.get(v) + int(sv)) / int(mv);
        for sw in 0..mw {
            if (beta.get(w) + int(sw)) / int(mw) == c {
                out.push(c.clone());
            }
        }
    }
    out.sort();
    out
}

/// `TSp^beta_{[0,1)}`: the vertex terms `(R^s_v + g_v - 1) t^{(s + beta_v)/m_v}`
/// plus one edge term per edge (multi-edges counted separately).
pub fn tsp(cg: &CompletedGraph, beta: &BetaAssignment) -> JumpSpectrum {
    let g = cg.base();
    let mut out = JumpSpectrum::new();
    for v in 0..g.len() {
        let mv = cg.mult(v);
        let bv = beta.get(v);
        let genus = g.vertex(v).genus as i64;
        for s in 0..mv {
            let shifted = bv + int(s);
            let mut r = Rational::zero();
            for w in g.neighbors(v) {
                r += frac(&(-beta.get(w) + &shifted * rat(cg.mult(w), mv)));
            }
            r += int(cg.arrows(v)) * frac(&(&shifted / int(mv)));
            let coeff = r + int(genus - 1);
            out.add_term(&shifted / int(mv), to_i64(&coeff));
        }
    }
    for &(v, w) in g.edges() {
        for c in edge_exponents(cg, beta, v, w) {
            out.add_term(c, 1);
        }
    }
    out
}

/// `TSp` with `beta_v = {-k_v}`; equals `sum_{c in [0,1)} m*(c) t^c`.
pub fn tsp_from_zk(g: &ResolutionGraph, f: &QCycle) -> Result<JumpSpectrum> {
    let cg = complete_graph(g, f)?;
    Ok(tsp(&cg, &BetaAssignment::from_canonical(g)))
}

/// The closed form of the Hodge spectrum on `[0, 1]`. For an arbitrary
/// decorated graph this is only the formal right-hand side.
pub fn hodge_spectrum_01(cg: &CompletedGraph) -> JumpSpectrum {
    let g = cg.base();
    let gh = g.total_genus() as i64 + g.first_betti() as i64;
    let mut out = JumpSpectrum::new();
    out.add_term(Rational::zero(), gh - 1);
    out.add_term(Rational::one(), cg.total_arrows() + gh - 1);
    for &(v, w) in g.edges() {
        let me = cg.edge_mult(v, w);
        for s in 1..me {
            out.add_term(rat(s, me), 1);
        }
    }
    for v in 0..g.len() {
        let mv = cg.mult(v);
        let genus = g.vertex(v).genus as i64;
        for s in 1..mv {
            let mut r = Rational::zero();
            for w in g.neighbors(v) {
                r += frac(&rat(s * cg.mult(w), mv));
            }
            r += int(cg.arrows(v)) * rat(s, mv);
            out.add_term(rat(s, mv), to_i64(&(r + int(genus - 1))));
        }
    }
    out
}

/// Adds `sigma(2 - a) = sigma(a)` for `a in (0, 1)`.
pub fn extend_by_symmetry(sp: &JumpSpectrum) -> Result<JumpSpectrum> {
    let (zero, one) = (Rational::zero(), Rational::one());
    if sp.exponents().any(|c| c < &zero || c > &one) {
        return Err(Error::precondition("spectrum must be supported in [0, 1]"));
    }
    let mut out = sp.clone();
    for (c, m) in sp.iter() {
        if c > &zero && c < &one {
            out.add_term(int(2) - c, m);
        }
    }
    Ok(out)
}

/// `prod_v (1 - t^{m_v})^{2 g_v - 2 + #W_v}` in factored form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZetaFunction {
    /// `(m_v, exponent)` per vertex, in vertex order.
    pub factors: Vec<(i64, i64)>,
    /// Dimension of the generalised 1-eigenspace on `H^0`.
    pub h0_eigen_one: i64,
    /// Dimension of the generalised 1-eigenspace on `H^1`.
    pub h1_eigen_one: i64,
}

impl ZetaFunction {
    /// `sum_v m_v * exponent_v`, i.e. `dim H^1 - dim H^0`.
    pub fn degree(&self) -> i64 {
        self.factors.iter().map(|(m, e)| m * e).sum()
    }
}

pub fn acampo_zeta(cg: &CompletedGraph) -> ZetaFunction {
    let g = cg.base();
    let factors = (0..g.len())
        .map(|v| (cg.mult(v), 2 * g.vertex(v).genus as i64 - 2 + cg.valency(v)))
        .collect();
    ZetaFunction {
        factors,
        h0_eigen_one: 1,
        h1_eigen_one: cg.total_arrows() + 2 * g.total_genus() as i64 + 2 * g.first_betti() as i64
            - 1,
    }
}
