//! Star-shaped graphs and weighted homogeneous singularities: Hirzebruch
//! continued fractions, Seifert invariants, Poincaré series of the graded
//! local ring, and the jump spectrum for `F = o E*_{v0}` read off from them.

use num_integer::Integer;
use num_traits::{One, Signed};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::formal::JumpSpectrum;
use crate::jumping::JumpInput;
use crate::lattice::{QCycle, ResolutionGraph};
use crate::rational::{self, int, rat, to_i64, Rational};

/// `[[b_1, ..., b_s]] = b_1 - 1/(b_2 - 1/(... - 1/b_s))` as `(alpha, omega)`.
pub fn cont_frac(b: &[i64]) -> Result<(i64, i64)> {
    if b.is_empty() {
        return Err(Error::precondition("empty continued fraction"));
    }
    if let Some(x) = b.iter().find(|&&x| x < 2) {
        return Err(Error::precondition(format!(
            "continued fraction entries must be >= 2, got {x}"
        )));
    }
    let (mut p, mut q) = (b[b.len() - 1], 1);
    for &x in b[..b.len() - 1].iter().rev() {
        (p, q) = (x * p - q, p);
    }
    Ok((p, q))
}

/// Inverse of [`cont_frac`] for `0 < omega < alpha`, `gcd = 1`.
pub fn cont_frac_expand(alpha: i64, omega: i64) -> Result<Vec<i64>> {
    if !(0 < omega && omega < alpha) || alpha.gcd(&omega) != 1 {
        return Err(Error::precondition(format!(
            "need coprime 0 < omega < alpha, got ({alpha}, {omega})"
        )));
    }
    let (mut p, mut q) = (alpha, omega);
    let mut out = Vec::new();
    while q > 0 {
        let b = Integer::div_ceil(&p, &q);
        out.push(b);
        (p, q) = (q, b * q - p);
    }
    Ok(out)
}

/// Seifert invariants `(b0, g; (alpha_j, omega_j))` of a star-shaped graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeifertData {
    pub b0: i64,
    pub g: u32,
    pub legs: Vec<(i64, i64)>,
}

impl SeifertData {
    pub fn new(b0: i64, g: u32, legs: Vec<(i64, i64)>) -> Result<Self> {
        for &(a, w) in &legs {
            if !(0 < w && w < a) || a.gcd(&w) != 1 {
                return Err(Error::precondition(format!(
                    "invalid leg ({a}, {w}): need coprime 0 < omega < alpha"
                )));
            }
        }
        if g == 0 && legs.len() < 3 {
            return Err(Error::NotStarShaped(format!(
                "genus 0 centre needs at least 3 legs, got {}",
                legs.len()
            )));
        }
        let sd = SeifertData { b0, g, legs };
        if !sd.e().is_negative() {
            return Err(Error::precondition(format!(
                "orbifold Euler number must be negative, got {}",
                rational::render(&sd.e())
            )));
        }
        Ok(sd)
    }

    /// Seifert data of the Brieskorn sphere `Sigma(a_1, ..., a_n)`, for
    /// pairwise coprime `a_j >= 2`.
    pub fn brieskorn(a: &[i64]) -> Result<Self> {
        check_pairwise_coprime(a)?;
        let total: i64 = a.iter().product();
        let legs: Vec<(i64, i64)> = a
            .iter()
            .map(|&aj| {
                let inv = mod_inverse((total / aj).rem_euclid(aj), aj);
                (aj, (-inv).rem_euclid(aj))
            })
            .collect();
        let b0: Rational = legs.iter().map(|&(a, w)| rat(w, a)).sum::<Rational>() + rat(1, total);
        SeifertData::new(to_i64(&b0), 0, legs)
    }

    pub fn nu(&self) -> usize {
        self.legs.len()
    }

    /// Orbifold Euler number `-b0 + sum omega_j / alpha_j`.
    pub fn e(&self) -> Rational {
        int(-self.b0) + self.legs.iter().map(|&(a, w)| rat(w, a)).sum::<Rational>()
    }

    /// Orbifold Euler characteristic `2 - 2g - sum (alpha_j - 1) / alpha_j`.
    pub fn chi_orb(&self) -> Rational {
        int(2 - 2 * self.g as i64)
            - self
                .legs
                .iter()
                .map(|&(a, _)| rat(a - 1, a))
                .sum::<Rational>()
    }

    /// `r = chi / e`.
    pub fn r(&self) -> Rational {
        self.chi_orb() / self.e()
    }

    fn alpha_product(&self) -> i64 {
        self.legs.iter().map(|&(a, _)| a).product()
    }

    /// `|H| = |e| prod alpha_j`.
    pub fn h_order(&self) -> i64 {
        to_i64(&(self.e().abs() * int(self.alpha_product())))
    }

    /// `alpha = lcm alpha_j`.
    pub fn alpha(&self) -> i64 {
        self.legs.iter().fold(1, |acc, &(a, _)| acc.lcm(&a))
    }

    /// `o = |e| alpha`, the order of `[E*_{v0}]` in `L'/L`.
    pub fn o(&self) -> i64 {
        to_i64(&(self.e().abs() * int(self.alpha())))
    }

    /// Central coefficient of `Z_K`, `1 + r`.
    pub fn k0(&self) -> Rational {
        Rational::one() + self.r()
    }

    /// Central coefficient of `E*_{v0}`, `prod alpha_j / |H|`.
    pub fn central_dual_coeff(&self) -> Rational {
        rat(self.alpha_product(), self.h_order())
    }

    /// The minimal good resolution graph: centre `c`, legs `l{j}_{k}`.
    pub fn to_graph(&self) -> Result<ResolutionGraph> {
        let legs: Vec<Vec<i64>> = self
            .legs
            .iter()
            .map(|&(a, w)| Ok(cont_frac_expand(a, w)?.into_iter().map(|b| -b).collect()))
            .collect::<Result<_>>()?;
        let refs: Vec<&[i64]> = legs.iter().map(|l| l.as_slice()).collect();
        Ok(crate::catalog::star(-self.b0, self.g, &refs))
    }
}

fn check_pairwise_coprime(a: &[i64]) -> Result<()> {
    for (i, &x) in a.iter().enumerate() {
        if x < 2 {
            return Err(Error::precondition(format!(
                "exponents must be >= 2, got {x}"
            )));
        }
        for &y in &a[i + 1..] {
            if x.gcd(&y) != 1 {
                return Err(Error::precondition(format!("{x} and {y} are not coprime")));
            }
        }
    }
    Ok(())
}

fn mod_inverse(x: i64, m: i64) -> i64 {
    let e = x.extended_gcd(&m);
    e.x.rem_euclid(m)
}

/// A star-shaped graph recognised together with its central vertex.
#[derive(Debug, Clone)]
pub struct Star {
    pub data: SeifertData,
    pub center: usize,
}

/// Recognises a star-shaped graph: a unique centre (valency >= 3 or positive
/// genus) whose removal leaves strings of rational curves. Legs are read
/// outward from the centre.
pub fn detect_star(g: &ResolutionGraph) -> Result<Star> {
    if !g.is_tree() {
        return Err(Error::NotStarShaped("graph has cycles".into()));
    }
    let centers: Vec<usize> = (0..g.len())
        .filter(|&v| g.degree(v) >= 3 || g.vertex(v).genus > 0)
        .collect();
    let center = match centers.as_slice() {
        [c] => *c,
        [] => {
            return Err(Error::NotStarShaped(
                "a string of rational curves has no central vertex".into(),
            ))
        }
        _ => {
            let ids: Vec<&str> = centers.iter().map(|&v| g.vertex(v).id.as_str()).collect();
            return Err(Error::NotStarShaped(format!(
                "ambiguous centre among {}",
                ids.join(", ")
            )));
        }
    };
    let mut legs = Vec::new();
    for start in g.neighbors(center) {
        let mut decorations = Vec::new();
        let (mut prev, mut cur) = (center, start);
        loop {
            decorations.push(-g.vertex(cur).euler);
            match g.neighbors(cur).find(|&w| w != prev) {
                Some(next) => (prev, cur) = (cur, next),
                None => break,
            }
        }
        legs.push(cont_frac(&decorations).map_err(|e| {
            Error::NotStarShaped(format!("leg through `{}`: {e}", g.vertex(start).id))
        })?);
    }
    let data = SeifertData::new(-g.vertex(center).euler, g.vertex(center).genus, legs)?;
    Ok(Star { data, center })
}

/// Truncated series `sum_{l <= l_max} dim R_l t^l`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PoincareSeries {
    coeffs: Vec<i64>,
}

impl PoincareSeries {
    pub fn from_coeffs(coeffs: Vec<i64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::precondition("empty Poincaré series"));
        }
        if coeffs.iter().any(|&c| c < 0) {
            return Err(Error::precondition("Poincaré coefficients must be >= 0"));
        }
        Ok(PoincareSeries { coeffs })
    }

    pub fn l_max(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, l: usize) -> i64 {
        self.coeffs.get(l).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Coefficientwise difference (can be negative, so returned raw).
    pub fn difference(&self, other: &PoincareSeries) -> Vec<i64> {
        let n = self.coeffs.len().min(other.coeffs.len());
        (0..n).map(|l| self.coeffs[l] - other.coeffs[l]).collect()
    }
}

/// `sum_l max{0, 1 + l b0 - sum_j ceil(l omega_j / alpha_j)} t^l`; `g = 0` only.
pub fn dpd_series(sd: &SeifertData, l_max: usize) -> Result<PoincareSeries> {
    if sd.g > 0 {
        return Err(Error::NeedsInput(
            "the Poincaré series is not determined by the graph for a positive genus centre".into(),
        ));
    }
    let coeffs = (0..=l_max as i64)
        .map(|l| {
            let s: i64 = sd
                .legs
                .iter()
                .map(|&(a, w)| Integer::div_ceil(&(l * w), &a))
                .sum();
            (1 + l * sd.b0 - s).max(0)
        })
        .collect();
    PoincareSeries::from_coeffs(coeffs)
}

/// `(1 - t^alpha)^{nu - 2} / prod_j (1 - t^{alpha / alpha_j})` for pairwise
/// coprime `alpha_j`, `alpha = prod alpha_j`.
pub fn brieskorn_series(a: &[i64], l_max: usize) -> Result<PoincareSeries> {
    check_pairwise_coprime(a)?;
    if a.len() < 2 {
        return Err(Error::precondition("need at least two exponents"));
    }
    let alpha: i64 = a.iter().product();
    let mut s = unit_series(l_max);
    for _ in 0..a.len() - 2 {
        mul_one_minus(&mut s, alpha);
    }
    for &aj in a {
        div_one_minus(&mut s, alpha / aj);
    }
    PoincareSeries::from_coeffs(s)
}

/// `(1 - t^d) / prod_i (1 - t^{w_i})`.
pub fn quasihomog_series(weights: &[i64], degree: i64, l_max: usize) -> Result<PoincareSeries> {
    if weights.is_empty() || weights.iter().any(|&w| w < 1) || degree < 1 {
        return Err(Error::precondition("weights and degree must be positive"));
    }
    let mut s = unit_series(l_max);
    mul_one_minus(&mut s, degree);
    for &w in weights {
        div_one_minus(&mut s, w);
    }
    PoincareSeries::from_coeffs(s)
}

fn unit_series(l_max: usize) -> Vec<i64> {
    let mut s = vec![0; l_max + 1];
    s[0] = 1;
    s
}

fn mul_one_minus(s: &mut [i64], k: i64) {
    let k = k as usize;
    for l in (k..s.len()).rev() {
        s[l] -= s[l - k];
    }
}

fn div_one_minus(s: &mut [i64], k: i64) {
    let k = k as usize;
    for l in k..s.len() {
        s[l] += s[l - k];
    }
}

/// Jump spectrum of a weighted homogeneous germ for `F = o E*_{v0}`:
/// `sum_l dim R_l t^{(l - r)/alpha}`, exact up to `c_max = (l_max - r)/alpha`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WhSpectrum {
    pub spectrum: JumpSpectrum,
    pub c_max: Rational,
}

pub fn wh_jump_spectrum(p: &PoincareSeries, sd: &SeifertData) -> WhSpectrum {
    let alpha = int(sd.alpha());
    let r = sd.r();
    let spectrum = JumpSpectrum::from_terms(
        p.coeffs()
            .iter()
            .enumerate()
            .map(|(l, &d)| ((int(l as i64) - &r) / &alpha, d)),
    );
    WhSpectrum {
        spectrum,
        c_max: (int(p.l_max() as i64) - r) / alpha,
    }
}

/// `F = o E*_{v0}` as a jump input.
pub fn central_input(g: &ResolutionGraph) -> Result<(JumpInput, Star)> {
    let star = detect_star(g)?;
    let f = g.dual_cycle(star.center).scale(&int(star.data.o()));
    Ok((JumpInput::new(g.clone(), f)?, star))
}

/// Outcome of [`tech_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TechCheck {
    Ok { checked: usize },
    Counterexample { c: Rational, s: QCycle },
}

/// For `F = o E*_{v0}` and integral antinef `s`: `L(c) <= s` iff
/// `L(c)_0 <= s_0`. Returns the first violating sample, if any.
pub fn tech_check(input: &JumpInput, samples: &[(Rational, QCycle)]) -> Result<TechCheck> {
    let g = input.graph();
    let star = detect_star(g)?;
    let expected = g.dual_cycle(star.center).scale(&int(star.data.o()));
    if input.f() != &expected {
        return Err(Error::precondition("F must be o E*_{v0}"));
    }
    let v0 = star.center;
    for (c, s) in samples {
        if !s.is_integral() {
            return Err(Error::NotIntegral);
        }
        g.check_antinef(s)?;
        let l = input.l_of(c);
        let full = s.ge(&l);
        let central = l.get(v0) <= s.get(v0);
        if full != central {
            return Ok(TechCheck::Counterexample {
                c: c.clone(),
                s: s.clone(),
            });
        }
    }
    Ok(TechCheck::Ok {
        checked: samples.len(),
    })
}

/// Sanity relations between the Seifert scalars and the lattice of the graph.
pub fn check_scalars(g: &ResolutionGraph, star: &Star) -> bool {
    let sd = &star.data;
    let v0 = star.center;
    let ed = g.dual_cycle(v0);
    let o = sd.o();
    let f = ed.scale(&int(o));
    let minimal = (1..o).all(|k| !ed.scale(&int(k)).is_integral());
    g.canonical_cycle().get(v0) == &sd.k0()
        && ed.get(v0) == &sd.central_dual_coeff()
        && num_bigint::BigInt::from(sd.h_order()) == g.determinant_abs()
        && f.is_integral()
        && minimal
        && f.get(v0) == &int(sd.alpha())
}
