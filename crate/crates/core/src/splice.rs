//! The multivariable series `Z(t) = prod_v (1 - t^{E*_v})^{kappa_v - 2}` of a
//! rational homology sphere graph, and the Hilbert function, geometric genus
//! and jump multiplicities it determines for splice-quotient singularities.
//!
//! The `E*_v` are linearly independent, so the exponent `sum_v a_v E*_v`
//! determines `(a_v)` and its coefficient is the product of the per-vertex
//! binomial coefficients. Exponents are stored as integer vectors scaled by
//! `d = |det I|`.

use std::collections::BTreeMap;

use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::formal::JumpSpectrum;
use crate::jumping::JumpInput;
use crate::lattice::{QCycle, ResolutionGraph};
use crate::rational::{int, rat, to_i64, Rational};

/// Checks the rational-homology-sphere condition: a tree with all genera 0.
pub fn assert_splice_applicable(g: &ResolutionGraph) -> Result<()> {
    if !g.is_tree() {
        return Err(Error::NotSpliceApplicable(format!(
            "graph has {} independent cycles",
            g.first_betti()
        )));
    }
    if let Some(v) = g.vertices().iter().find(|v| v.genus > 0) {
        return Err(Error::NotSpliceApplicable(format!(
            "vertex `{}` has genus {}",
            v.id, v.genus
        )));
    }
    Ok(())
}

/// A graph admitting splice-quotient structures, with `E*` precomputed.
#[derive(Debug, Clone)]
pub struct SpliceQuotient {
    graph: ResolutionGraph,
    d: i64,
    /// `d * E*_v`, indexed `[v][i]`.
    duals: Vec<Vec<i64>>,
    /// `kappa_v - 2`.
    exps: Vec<i64>,
}

/// Truncated coefficient table of `Z(t)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesTable {
    d: i64,
    bound: Vec<i64>,
    coeffs: BTreeMap<Vec<i64>, i64>,
}

impl SeriesTable {
    /// `|det I|`; every exponent has denominator dividing it.
    pub fn denominator(&self) -> i64 {
        self.d
    }

    /// Componentwise bound below which all coefficients are exact.
    pub fn bound(&self) -> QCycle {
        unscale(&self.bound, self.d)
    }

    pub fn get(&self, l: &QCycle) -> i64 {
        scale(l, self.d)
            .and_then(|k| self.coeffs.get(&k).copied())
            .unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Nonzero terms in lexicographic order of their scaled exponents.
    pub fn iter(&self) -> impl Iterator<Item = (QCycle, i64)> + '_ {
        self.coeffs.iter().map(|(k, &c)| (unscale(k, self.d), c))
    }

    /// The integral part `Z_0(t)`.
    pub fn integral_part(&self) -> SeriesTable {
        SeriesTable {
            d: self.d,
            bound: self.bound.clone(),
            coeffs: self
                .coeffs
                .iter()
                .filter(|(k, _)| k.iter().all(|x| x % self.d == 0))
                .map(|(k, &c)| (k.clone(), c))
                .collect(),
        }
    }

    /// Terms with exponent `<= bound` (a bound no larger than this table's).
    pub fn restrict(&self, bound: &QCycle) -> SeriesTable {
        let b = scale_floor(bound, self.d);
        SeriesTable {
            d: self.d,
            bound: b.clone(),
            coeffs: self
                .coeffs
                .iter()
                .filter(|(k, _)| le(k, &b))
                .map(|(k, &c)| (k.clone(), c))
                .collect(),
        }
    }
}

/// `h(l)` together with the a priori bound on the exponents that can enter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertValue {
    pub value: i64,
    pub bound: QCycle,
}

impl SpliceQuotient {
    pub fn new(graph: ResolutionGraph) -> Result<Self> {
        assert_splice_applicable(&graph)?;
        let d = graph
            .determinant_abs()
            .to_i64()
            .ok_or_else(|| Error::precondition("determinant too large"))?;
        let duals = (0..graph.len())
            .map(|v| scale(&graph.dual_cycle(v), d).expect("d clears E*"))
            .collect();
        let exps = (0..graph.len())
            .map(|v| graph.degree(v) as i64 - 2)
            .collect();
        Ok(SpliceQuotient {
            graph,
            d,
            duals,
            exps,
        })
    }

    pub fn graph(&self) -> &ResolutionGraph {
        &self.graph
    }

    /// Coefficient of `t^{a E*_v}` in the factor of `v`.
    fn factor_coeff(&self, v: usize, a: i64) -> i64 {
        let k = self.exps[v];
        if k >= 0 {
            if a > k {
                0
            } else if a % 2 == 0 {
                binomial(k, a)
            } else {
                -binomial(k, a)
            }
        } else {
            binomial(a - k - 1, -k - 1)
        }
    }

    fn max_power(&self, v: usize) -> Option<i64> {
        (self.exps[v] >= 0).then_some(self.exps[v])
    }

    /// Visits every support point `sum a_v E*_v` (scaled) with its
    /// coefficient, skipping a branch as soon as `stop` holds. `stop` must be
    /// monotone: if it holds for `x` it holds for every `y >= x`.
    fn enumerate(&self, stop: &dyn Fn(&[i64]) -> bool, visit: &mut dyn FnMut(&[i64], i64)) {
        let mut partial = vec![0i64; self.graph.len()];
        if !stop(&partial) {
            self.dfs(0, &mut partial, 1, stop, visit);
        }
    }

    fn dfs(
        &self,
        v: usize,
        partial: &mut Vec<i64>,
        coeff: i64,
        stop: &dyn Fn(&[i64]) -> bool,
        visit: &mut dyn FnMut(&[i64], i64),
    ) {
        if v == partial.len() {
            visit(partial, coeff);
            return;
        }
        let saved = partial.clone();
        let mut a = 0;
        loop {
            if self.max_power(v).is_some_and(|k| a > k) {
                break;
            }
            if a > 0 {
                for (x, y) in partial.iter_mut().zip(&self.duals[v]) {
                    *x += y;
                }
                if stop(partial) {
                    break;
                }
            }
            self.dfs(v + 1, partial, coeff * self.factor_coeff(v, a), stop, visit);
            a += 1;
        }
        *partial = saved;
    }

    /// All coefficients with exponent `<= bound`, by direct enumeration.
    pub fn zeta_table(&self, bound: &QCycle) -> Result<SeriesTable> {
        self.check_bound(bound)?;
        let b = scale_floor(bound, self.d);
        let mut coeffs = BTreeMap::new();
        self.enumerate(&|x| !le(x, &b), &mut |x, c| {
            if c != 0 {
                coeffs.insert(x.to_vec(), c);
            }
        });
        Ok(SeriesTable {
            d: self.d,
            bound: b,
            coeffs,
        })
    }

    /// The same table by multiplying the truncated factor series one at a time.
    pub fn zeta_table_by_multiplication(&self, bound: &QCycle) -> Result<SeriesTable> {
        self.check_bound(bound)?;
        let b = scale_floor(bound, self.d);
        let n = self.graph.len();
        let mut acc: BTreeMap<Vec<i64>, i64> = BTreeMap::from([(vec![0; n], 1)]);
        for v in 0..n {
            let mut factor = Vec::new();
            let mut x = vec![0i64; n];
            let mut a = 0;
            while le(&x, &b) && self.max_power(v).is_none_or(|k| a <= k) {
                factor.push((x.clone(), self.factor_coeff(v, a)));
                for (xi, y) in x.iter_mut().zip(&self.duals[v]) {
                    *xi += y;
                }
                a += 1;
            }
            let mut next = BTreeMap::new();
            for (k, c) in &acc {
                for (e, fc) in &factor {
                    let sum: Vec<i64> = k.iter().zip(e).map(|(p, q)| p + q).collect();
                    if le(&sum, &b) {
                        *next.entry(sum).or_insert(0) += c * fc;
                    }
                }
            }
            next.retain(|_, c| *c != 0);
            acc = next;
        }
        Ok(SeriesTable {
            d: self.d,
            bound: b,
            coeffs: acc,
        })
    }

    fn check_bound(&self, bound: &QCycle) -> Result<()> {
        if bound.len() != self.graph.len() {
            return Err(Error::DimensionMismatch {
                expected: self.graph.len(),
                got: bound.len(),
            });
        }
        if bound.coeffs().iter().any(|x| x < &Rational::zero()) {
            return Err(Error::precondition("series bound must be >= 0"));
        }
        Ok(())
    }

    /// A bound containing every support point `l~` with `l~_i < l_i` for
    /// some `i`: such a point has `sum a_v <= max_i (l_i - 1) / min_v (E*_v)_i`.
    pub fn bound_for(&self, l: &QCycle) -> QCycle {
        let n = self.graph.len();
        let mut steps = Rational::zero();
        for i in 0..n {
            let li = l.get(i) - int(1);
            if li < Rational::zero() {
                continue;
            }
            let min = (0..n).map(|v| self.duals[v][i]).min().expect("nonempty");
            let s = li * rat(self.d, min);
            if s > steps {
                steps = s;
            }
        }
        let steps = steps.floor();
        QCycle::new(
            (0..n)
                .map(|i| {
                    let max = (0..n).map(|v| self.duals[v][i]).max().expect("nonempty");
                    &steps * rat(max, self.d)
                })
                .collect(),
        )
    }

    /// `h(l) = sum of p(l~)` over integral support points with `l~ >= l` false.
    pub fn hilbert(&self, l: &QCycle) -> Result<HilbertValue> {
        let target = self.integral_target(l)?;
        let mut value = 0;
        self.enumerate(&|x| le(&target, x), &mut |x, c| {
            if self.is_integral(x) {
                value += c;
            }
        });
        Ok(HilbertValue {
            value,
            bound: self.bound_for(l),
        })
    }

    fn integral_target(&self, l: &QCycle) -> Result<Vec<i64>> {
        if l.len() != self.graph.len() {
            return Err(Error::DimensionMismatch {
                expected: self.graph.len(),
                got: l.len(),
            });
        }
        if !l.is_integral() {
            return Err(Error::NotIntegral);
        }
        Ok(scale(l, self.d).expect("integral"))
    }

    fn is_integral(&self, x: &[i64]) -> bool {
        x.iter().all(|c| c % self.d == 0)
    }

    /// `p_g = h(floor Z_K) - chi(floor Z_K)`.
    pub fn pg(&self) -> i64 {
        let l = self.graph.canonical_cycle().floor();
        let chi = to_i64(&self.graph.chi(&l).expect("dimensions match"));
        self.hilbert(&l).expect("integral").value - chi
    }

    fn check_input(&self, input: &JumpInput) -> Result<()> {
        if input.graph() != &self.graph {
            return Err(Error::precondition("jump input is on a different graph"));
        }
        Ok(())
    }

    /// `m(c) = sum p(l)` over integral `l` with `l >= L(c) - D_c` and
    /// `l >= L(c)` false. Valid for every rational `c`.
    pub fn mult(&self, input: &JumpInput, c: &Rational) -> Result<i64> {
        self.check_input(input)?;
        let d = input.d_of(c);
        if d.is_zero() {
            return Ok(0);
        }
        let upper = self.integral_target(&input.l_of(c))?;
        let lower = self.integral_target(&input.l_minus(c))?;
        let mut total = 0;
        self.enumerate(&|x| le(&upper, x), &mut |x, coeff| {
            if self.is_integral(x) && le(&lower, x) {
                total += coeff;
            }
        });
        Ok(total)
    }

    /// `m(c)` for every candidate `c` in `[lct, c_max]`.
    pub fn spectrum(&self, input: &JumpInput, c_max: &Rational) -> Result<JumpSpectrum> {
        self.check_input(input)?;
        let (lct, _) = input.lct();
        let mut out = JumpSpectrum::new();
        for c in input.candidates(&lct, c_max) {
            let m = self.mult(input, &c)?;
            out.add_term(c, m);
        }
        Ok(out)
    }
}

pub fn zeta_table(g: &ResolutionGraph, bound: &QCycle) -> Result<SeriesTable> {
    SpliceQuotient::new(g.clone())?.zeta_table(bound)
}

pub fn hilbert(g: &ResolutionGraph, l: &QCycle) -> Result<HilbertValue> {
    SpliceQuotient::new(g.clone())?.hilbert(l)
}

pub fn pg_splice(g: &ResolutionGraph) -> Result<i64> {
    Ok(SpliceQuotient::new(g.clone())?.pg())
}

pub fn splice_mult(input: &JumpInput, c: &Rational) -> Result<i64> {
    SpliceQuotient::new(input.graph().clone())?.mult(input, c)
}

pub fn splice_spectrum(input: &JumpInput, c_max: &Rational) -> Result<JumpSpectrum> {
    SpliceQuotient::new(input.graph().clone())?.spectrum(input, c_max)
}

fn le(a: &[i64], b: &[i64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn scale(l: &QCycle, d: i64) -> Option<Vec<i64>> {
    l.coeffs()
        .iter()
        .map(|x| {
            let y = x * int(d);
            y.is_integer().then(|| y.to_integer().to_i64()).flatten()
        })
        .collect()
}

fn scale_floor(l: &QCycle, d: i64) -> Vec<i64> {
    l.coeffs()
        .iter()
        .map(|x| to_i64(&(x * int(d)).floor()))
        .collect()
}

fn unscale(k: &[i64], d: i64) -> QCycle {
    QCycle::new(k.iter().map(|&x| rat(x, d)).collect())
}

fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1i64, |acc, i| acc * (n - i) / (i + 1))
}
