//! Jumping numbers and multiplicities of multiplier ideals `I(c, F)` for an
//! integral antinef cycle `F`.
//!
//! The cycles involved are `L(c) = floor(Z_K + cF)`, the jumping divisor
//! `D_c = L(c) - L(c - eps)` and `Delta_c = {Z_K + cF}`. The infinitesimal
//! shift is never evaluated numerically: `E_i` lies in `D_c` exactly when
//! `k_i + c m_i` is an integer, so `L(c - eps) = L(c) - D_c`.
//!
//! For `c > 0` the multiplicities are purely combinatorial (Riemann-Roch):
//! `m(c) = chi(L(c)) - chi(L(c - eps))`. At `c = 0` an analytic 0/1 term
//! `h0` enters; for `c < 0` nothing is computed here, only the threshold and
//! the sum identities (see `splice` and `seifert` for structures where the
//! negative zone is known).

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::formal::JumpSpectrum;
use crate::lattice::{QCycle, ResolutionGraph};
use crate::rational::{self, ceil_i64, floor_i64, int, to_i64, Rational};

/// How the analytic correction `h0` at `c = 0` is obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum H0Policy {
    /// Derived from the graph when all genera vanish; otherwise unresolved.
    #[default]
    Auto,
    /// Supplied by the caller (0 or 1).
    Value(u8),
}

/// A graph together with an integral, nonzero, antinef cycle `F`.
#[derive(Debug, Clone)]
pub struct JumpInput {
    graph: ResolutionGraph,
    f: QCycle,
    h0_policy: H0Policy,
    pg: Option<u64>,
}

/// `m(0) = m*(0) + h0`, with `h0 = None` when it cannot be decided.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ZeroMultiplicity {
    pub m_star: i64,
    pub h0: Option<u8>,
}

impl ZeroMultiplicity {
    pub fn total(&self) -> Option<i64> {
        self.h0.map(|h| self.m_star + h as i64)
    }
}

impl JumpInput {
    pub fn new(graph: ResolutionGraph, f: QCycle) -> Result<Self> {
        if f.len() != graph.len() {
            return Err(Error::DimensionMismatch {
                expected: graph.len(),
                got: f.len(),
            });
        }
        if !f.is_integral() {
            return Err(Error::NotIntegral);
        }
        if f.is_zero() {
            return Err(Error::ZeroCycle);
        }
        graph.check_antinef(&f)?;
        Ok(JumpInput {
            graph,
            f,
            h0_policy: H0Policy::Auto,
            pg: None,
        })
    }

    /// Accepts a rational antinef `F` by clearing denominators.
    ///
    /// Returns the input for `r F` (integral) together with `r`. Since
    /// `m_{rF}(c) = m_F(rc)`, a spectrum computed for the returned input maps
    /// back to `F` via [`JumpSpectrum::scale_exponents`] with factor `r`.
    pub fn from_rational(graph: ResolutionGraph, f: &QCycle) -> Result<(Self, BigInt)> {
        if f.len() != graph.len() {
            return Err(Error::DimensionMismatch {
                expected: graph.len(),
                got: f.len(),
            });
        }
        let r = f.denominator();
        let scaled = f.scale(&Rational::from_integer(r.clone()));
        Ok((JumpInput::new(graph, scaled)?, r))
    }

    pub fn with_h0(mut self, policy: H0Policy) -> Result<Self> {
        if let H0Policy::Value(v) = policy {
            if v > 1 {
                return Err(Error::precondition(format!("h0 must be 0 or 1, got {v}")));
            }
            if v == 1 && !self.graph.canonical_cycle().is_integral() {
                return Err(Error::precondition(
                    "h0 = 1 requires D_0 = E, i.e. an integral Z_K",
                ));
            }
        }
        self.h0_policy = policy;
        Ok(self)
    }

    pub fn with_pg(mut self, pg: Option<u64>) -> Self {
        self.pg = pg;
        self
    }

    pub fn graph(&self) -> &ResolutionGraph {
        &self.graph
    }

    pub fn f(&self) -> &QCycle {
        &self.f
    }

    pub fn pg(&self) -> Option<u64> {
        self.pg
    }

    pub fn h0_policy(&self) -> H0Policy {
        self.h0_policy
    }

    fn zk(&self) -> &QCycle {
        self.graph.canonical_cycle()
    }

    /// `Z_K + cF`.
    fn shifted(&self, c: &Rational) -> QCycle {
        self.zk() + &self.f.scale(c)
    }

    /// `L(c) = floor(Z_K + cF)`.
    pub fn l_of(&self, c: &Rational) -> QCycle {
        self.shifted(c).floor()
    }

    /// Reduced cycle supported on `{ i : k_i + c m_i in Z }`.
    pub fn d_of(&self, c: &Rational) -> QCycle {
        let s = self.shifted(c);
        QCycle::new(
            s.coeffs()
                .iter()
                .map(|x| {
                    if x.is_integer() {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                })
                .collect(),
        )
    }

    /// `L(c - eps) = L(c) - D_c`.
    pub fn l_minus(&self, c: &Rational) -> QCycle {
        self.l_of(c) - self.d_of(c)
    }

    /// `Delta_c = {Z_K + cF}`.
    pub fn delta_of(&self, c: &Rational) -> QCycle {
        self.shifted(c).frac()
    }

    /// The smallest jumping number `min_i (1 - k_i) / m_i`, always of
    /// multiplicity one.
    pub fn lct(&self) -> (Rational, i64) {
        let zk = self.zk();
        let c = (0..self.graph.len())
            .map(|i| (Rational::one() - zk.get(i)) / self.f.get(i))
            .min()
            .expect("graphs are nonempty");
        (c, 1)
    }

    /// All `c` in `[lo, hi]` with `D_c != 0`, sorted and deduplicated.
    pub fn candidates(&self, lo: &Rational, hi: &Rational) -> Vec<Rational> {
        let mut out = Vec::new();
        if lo > hi {
            return out;
        }
        let zk = self.zk();
        for i in 0..self.graph.len() {
            let m = self.f.get(i);
            let k = zk.get(i);
            let first = ceil_i64(&(lo * m + k));
            let last = floor_i64(&(hi * m + k));
            for n in first..=last {
                out.push((int(n) - k) / m);
            }
        }
        out.sort();
        out.dedup();
        out
    }

    fn chi_int(&self, l: &QCycle) -> i64 {
        to_i64(&self.graph.chi(l).expect("dimensions match"))
    }

    fn pair(&self, a: &QCycle, b: &QCycle) -> Rational {
        self.graph.pairing(a, b).expect("dimensions match")
    }

    /// `m(c) = chi(L(c)) - chi(L(c - eps))` for `c > 0`.
    pub fn mult_pos(&self, c: &Rational) -> Result<i64> {
        if !c.is_positive() {
            return Err(Error::precondition(format!(
                "mult_pos needs c > 0, got {}",
                rational::render(c)
            )));
        }
        Ok(self.chi_difference(c))
    }

    fn chi_difference(&self, c: &Rational) -> i64 {
        let d = self.d_of(c);
        if d.is_zero() {
            return 0;
        }
        let l = self.l_of(c);
        self.chi_int(&l) - self.chi_int(&(&l - &d))
    }

    /// The analytic term `h0 in {0, 1}`, when it can be decided.
    ///
    /// With all genera zero it is 1 exactly for integral `Z_K`; with positive
    /// genus it depends on line-bundle data invisible to the graph.
    pub fn h0(&self) -> Option<u8> {
        match self.h0_policy {
            H0Policy::Value(v) => Some(v),
            H0Policy::Auto if self.graph.total_genus() == 0 => Some(self.zk().is_integral() as u8),
            H0Policy::Auto => None,
        }
    }

    pub fn mult_zero(&self) -> ZeroMultiplicity {
        ZeroMultiplicity {
            m_star: self.chi_difference(&Rational::zero()),
            h0: self.h0(),
        }
    }

    /// `m(c)` for any `c >= 0`; fails with `NeedsInput` at `c = 0` when `h0`
    /// is unresolved.
    pub fn mult(&self, c: &Rational) -> Result<i64> {
        if c.is_positive() {
            self.mult_pos(c)
        } else if c.is_zero() {
            self.mult_zero().total().ok_or_else(needs_h0)
        } else {
            Err(Error::precondition(
                "multiplicities for c < 0 depend on the analytic structure",
            ))
        }
    }

    /// `(D_c, Delta_c) - chi(D_c) - c (D_c, F)`; at `c = 0` this is `m*(0)`.
    pub fn mult_via_dc(&self, c: &Rational) -> Result<i64> {
        if c.is_negative() {
            return Err(Error::precondition("mult_via_dc needs c >= 0"));
        }
        let d = self.d_of(c);
        if d.is_zero() {
            return Ok(0);
        }
        let delta = self.delta_of(c);
        let chi_d = self.graph.chi(&d).expect("dimensions match");
        let value = self.pair(&d, &delta) - chi_d - c * self.pair(&d, &self.f);
        Ok(to_i64(&value))
    }

    /// `(D_c, F)`.
    pub fn dc_dot_f(&self, c: &Rational) -> i64 {
        to_i64(&self.pair(&self.d_of(c), &self.f))
    }

    /// Predicts `m(c + 1)` as `m(c) - (D_c, F)`, for `c > 0`.
    pub fn recurrence_check(&self, c: &Rational) -> Result<i64> {
        Ok(self.mult_pos(c)? - self.dc_dot_f(c))
    }

    /// All nonzero `m(c)` with `0 <= c <= c_max`, one candidate at a time.
    ///
    /// The closed form [`spectrum_nonneg_closed_form`](Self::spectrum_nonneg_closed_form)
    /// is evaluated as well and must agree.
    pub fn spectrum_nonneg(&self, c_max: &Rational) -> Result<JumpSpectrum> {
        let direct = self.spectrum_nonneg_direct(c_max)?;
        let closed = self.spectrum_nonneg_closed_form(c_max)?;
        assert_eq!(
            direct, closed,
            "direct and closed-form nonnegative spectra disagree"
        );
        Ok(direct)
    }

    pub fn spectrum_nonneg_direct(&self, c_max: &Rational) -> Result<JumpSpectrum> {
        if c_max.is_negative() {
            return Err(Error::precondition("c_max must be >= 0"));
        }
        let mut out = JumpSpectrum::new();
        for c in self.candidates(&Rational::zero(), c_max) {
            let m = self.mult(&c)?;
            out.add_term(c, m);
        }
        Ok(out)
    }

    /// `h0 t^0 + sum_{c in [0,1)} t^c (m*(c)/(1-t) - (D_c,F) t/(1-t)^2)`,
    /// expanded up to `c_max`: the coefficient at `c + n` is `m*(c) - n (D_c, F)`.
    pub fn spectrum_nonneg_closed_form(&self, c_max: &Rational) -> Result<JumpSpectrum> {
        if c_max.is_negative() {
            return Err(Error::precondition("c_max must be >= 0"));
        }
        let h0 = self.h0().ok_or_else(needs_h0)?;
        let mut out = JumpSpectrum::new();
        out.add_term(Rational::zero(), h0 as i64);
        let one = Rational::one();
        let below_one: Vec<Rational> = self
            .candidates(&Rational::zero(), &one)
            .into_iter()
            .filter(|c| c < &one)
            .collect();
        for c in below_one {
            let m_star = self.mult_via_dc(&c)?;
            let dcf = self.dc_dot_f(&c);
            let mut n = 0i64;
            loop {
                let e = &c + int(n);
                if &e > c_max {
                    break;
                }
                out.add_term(e, m_star - n * dcf);
                n += 1;
            }
        }
        Ok(out)
    }

    /// `sum_{c in (0,1]} m(c) = chi(-F) + ({Z_K}, F)`.
    pub fn sum_01(&self) -> Rational {
        let chi = self.graph.chi(&-&self.f).expect("dimensions match");
        chi + self.pair(&self.zk().frac(), &self.f)
    }

    /// `sum_{c <= 0} m(c) = chi(floor Z_K) + p_g`; needs `p_g`.
    pub fn sum_nonpos(&self) -> Result<Rational> {
        let pg = self
            .pg
            .ok_or_else(|| Error::NeedsInput("p_g is required for the c <= 0 sum".into()))?;
        Ok(self
            .graph
            .chi(&self.zk().floor())
            .expect("dimensions match")
            + int(pg as i64))
    }
}

fn needs_h0() -> Error {
    Error::NeedsInput("h0 at c = 0 cannot be derived for positive genus; pass it explicitly".into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::rational::rat;

    fn rational_example() -> JumpInput {
        let g = catalog::rational_arrow_graph();
        let f = g.dual_cycle(3);
        JumpInput::new(g, f).unwrap()
    }

    fn laufer(f: &[i64]) -> JumpInput {
        JumpInput::new(catalog::elliptic_chain(), QCycle::from_integers(f)).unwrap()
    }

    #[test]
    fn input_validation() {
        let g = catalog::elliptic_chain();
        assert_eq!(
            JumpInput::new(g.clone(), g.zero_cycle()).unwrap_err(),
            Error::ZeroCycle
        );
        assert_eq!(
            JumpInput::new(g.clone(), g.dual_cycle(0).scale(&rat(1, 2))).unwrap_err(),
            Error::NotIntegral
        );
        assert!(matches!(
            JumpInput::new(g.clone(), g.unit_cycle(0)),
            Err(Error::NotAntinef { .. })
        ));
        let (inp, r) =
            JumpInput::from_rational(g.clone(), &g.dual_cycle(0).scale(&rat(1, 2))).unwrap();
        assert_eq!(r, BigInt::from(2));
        assert_eq!(inp.f(), &g.dual_cycle(0));
    }

    #[test]
    fn l_d_delta_on_laufer_chain() {
        let j = laufer(&[1, 1, 1]);
        assert_eq!(j.l_of(&int(-2)), QCycle::from_integers(&[1, 0, -1]));
        assert_eq!(j.l_of(&int(0)), QCycle::from_integers(&[3, 2, 1]));
        assert_eq!(j.l_of(&int(1)), QCycle::from_integers(&[4, 3, 2]));
        assert_eq!(j.d_of(&int(0)), QCycle::from_integers(&[1, 1, 1]));
        assert!(j.delta_of(&int(0)).is_zero());
        assert_eq!(j.l_minus(&int(0)), QCycle::from_integers(&[2, 1, 0]));
    }

    #[test]
    fn jumping_divisor_on_rational_example() {
        let j = rational_example();
        // F = E*_4 is integral, so D_c != 0 only for c in (1/4) Z.
        assert!(j.d_of(&rat(1, 3)).is_zero());
        assert!(!j.d_of(&int(0)).is_zero());
        assert_eq!(j.delta_of(&int(0)), j.graph().canonical_cycle().frac());
        for c in [rat(1, 4), rat(-7, 12), rat(5, 3)] {
            assert_eq!(j.d_of(&c), j.d_of(&(&c + int(1))));
        }
    }

    #[test]
    fn lct_values() {
        assert_eq!(rational_example().lct(), (rat(-1, 4), 1));
        let g = crate::lattice::ResolutionGraph::from_parts(&[("a", -2, 0)], &[]).unwrap();
        let f = g.reduced_cycle();
        assert_eq!(JumpInput::new(g, f).unwrap().lct().0, int(1));
        assert_eq!(laufer(&[1, 1, 1]).lct().0, int(-2));
    }

    #[test]
    fn candidate_enumeration() {
        let g = crate::lattice::ResolutionGraph::from_parts(&[("a", -2, 0)], &[]).unwrap();
        let f = g.reduced_cycle();
        let j = JumpInput::new(g, f).unwrap();
        assert_eq!(j.candidates(&int(0), &int(2)), vec![int(0), int(1), int(2)]);

        let c = rational_example().candidates(&rat(1, 100), &int(1));
        for x in [rat(1, 4), rat(1, 2), rat(3, 4), int(1)] {
            assert!(c.contains(&x));
        }

        let j = laufer(&[3, 2, 1]);
        let c = j.candidates(&rat(1, 100), &int(2));
        for n in 1..=6 {
            assert!(c.contains(&rat(n, 3)));
        }
        assert!(c.contains(&rat(1, 2)));
        assert!(c.iter().all(|x| !j.d_of(x).is_zero()));
        assert!(j.candidates(&int(1), &int(0)).is_empty());
    }

    #[test]
    fn positive_multiplicities_of_rational_example() {
        let j = rational_example();
        assert_eq!(j.mult_pos(&rat(3, 4)).unwrap(), 2);
        assert_eq!(j.mult_pos(&int(1)).unwrap(), 1);
        assert_eq!(j.mult_pos(&rat(7, 4)).unwrap(), 3);
        assert_eq!(j.mult_pos(&rat(1, 3)).unwrap(), 0);
        assert!(j.mult_pos(&int(0)).is_err());
        assert_eq!(j.mult_via_dc(&rat(3, 4)).unwrap(), 2);
    }

    #[test]
    fn laufer_chain_positive_zone() {
        for n in 1..=6 {
            let c = rat(n, 3);
            assert_eq!(laufer(&[3, 2, 1]).mult_pos(&c).unwrap(), (n + 2) / 3);
            assert_eq!(laufer(&[3, 3, 3]).mult_pos(&c).unwrap(), n);
        }
    }

    #[test]
    fn zero_multiplicity() {
        let z = rational_example().mult_zero();
        assert_eq!(z.h0, Some(0));
        assert_eq!(z.total(), Some(0));

        let j = laufer(&[1, 1, 1]);
        assert_eq!(j.mult_zero().h0, None);
        assert_eq!(
            j.mult(&int(0)).unwrap_err().class(),
            crate::ErrorClass::NeedsInput
        );
        let j = j.with_h0(H0Policy::Value(1)).unwrap();
        assert_eq!(
            j.mult_zero(),
            ZeroMultiplicity {
                m_star: 0,
                h0: Some(1)
            }
        );

        let g = crate::lattice::ResolutionGraph::from_parts(&[("a", -2, 0)], &[]).unwrap();
        let f = g.reduced_cycle();
        let j = JumpInput::new(g, f).unwrap();
        assert_eq!(j.h0(), Some(1));
        // chi(0) - chi(-E) + 1 = 0 - 1 + 1
        assert_eq!(j.mult_zero().m_star, -1);
        assert!(j.spectrum_nonneg(&int(0)).unwrap().is_empty());

        assert!(rational_example().with_h0(H0Policy::Value(1)).is_err());
        assert!(rational_example().with_h0(H0Policy::Value(2)).is_err());
    }

    #[test]
    fn recurrences() {
        let j = rational_example();
        let c = rat(3, 4);
        assert_eq!(
            j.recurrence_check(&c).unwrap(),
            j.mult_pos(&rat(7, 4)).unwrap()
        );
        let c = rat(1, 3);
        assert_eq!(j.recurrence_check(&c).unwrap(), 0);
        // m(1) = m(0) - h0 - (D_0, F)
        let m0 = j.mult_zero();
        assert_eq!(
            j.mult_pos(&int(1)).unwrap(),
            m0.total().unwrap() - m0.h0.unwrap() as i64 - j.dc_dot_f(&int(0))
        );
        assert!(j.recurrence_check(&int(0)).is_err());
    }

    #[test]
    fn nonnegative_spectrum_of_rational_example() {
        let s = rational_example().spectrum_nonneg(&rat(7, 4)).unwrap();
        let expected = JumpSpectrum::from_terms([
            (rat(3, 4), 2),
            (int(1), 1),
            (rat(5, 4), 1),
            (rat(3, 2), 1),
            (rat(7, 4), 3),
        ]);
        assert_eq!(s, expected);
    }

    #[test]
    fn sums() {
        let j = rational_example();
        assert_eq!(j.sum_01(), int(3));
        let direct: i64 = j
            .candidates(&rat(1, 1000), &int(1))
            .iter()
            .map(|c| j.mult_pos(c).unwrap())
            .sum();
        assert_eq!(direct, 3);
        assert!(matches!(j.sum_nonpos(), Err(Error::NeedsInput(_))));
        assert_eq!(j.clone().with_pg(Some(0)).sum_nonpos().unwrap(), int(1));
        // numerically Gorenstein: the sum is p_g
        for pg in 1..=3 {
            let j = laufer(&[1, 1, 1]).with_pg(Some(pg));
            assert_eq!(j.sum_nonpos().unwrap(), int(pg as i64));
        }
    }
}
