//! Seeded generators and independent oracles shared by the integration tests.
#![allow(dead_code)]

use jumplat::lattice::{QCycle, ResolutionGraph, Vertex};
use jumplat::rational::{int, rat, Rational};
use num_traits::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random tree on `n` vertices with `e_i = -deg(i) - slack_i`.
///
/// With `min_slack >= 1` the form is strictly diagonally dominant. With
/// `min_slack = 0` one vertex is forced to slack 1 so the tree stays
/// negative definite; genus-0 trees of this kind are rational.
pub fn random_tree(
    rng: &mut impl Rng,
    n: usize,
    min_slack: i64,
    max_slack: i64,
    genus: bool,
) -> ResolutionGraph {
    let edges: Vec<(usize, usize)> = (1..n).map(|i| (rng.gen_range(0..i), i)).collect();
    let mut deg = vec![0i64; n];
    for &(a, b) in &edges {
        deg[a] += 1;
        deg[b] += 1;
    }
    let strict = rng.gen_range(0..n);
    let vertices = (0..n)
        .map(|i| {
            let mut slack = rng.gen_range(min_slack..=max_slack);
            if i == strict {
                slack = slack.max(1);
            }
            let g = if genus && rng.gen_bool(0.2) { 1 } else { 0 };
            Vertex::new(format!("x{i}"), -deg[i] - slack, g)
        })
        .collect();
    ResolutionGraph::new(vertices, edges).expect("dominant trees are negative definite")
}

/// Smallest integral antinef cycle above a random cycle with entries in `1..=max`.
pub fn random_antinef(rng: &mut impl Rng, g: &ResolutionGraph, max: i64) -> QCycle {
    let x = QCycle::from_integers(
        &(0..g.len())
            .map(|_| rng.gen_range(1..=max))
            .collect::<Vec<_>>(),
    );
    g.antinef_closure(&x).unwrap()
}

/// Random coprime `0 < omega < alpha` with `alpha <= amax`.
pub fn random_leg(rng: &mut impl Rng, amax: i64) -> (i64, i64) {
    loop {
        let a = rng.gen_range(2..=amax);
        let w = rng.gen_range(1..a);
        if num_integer::gcd(a, w) == 1 {
            return (a, w);
        }
    }
}

// ---------------------------------------------------------------------------
// Oracles. These avoid the library's cached inverse, its D_c shortcut and its
// series code, so agreement is a genuine cross-check.

/// Solves `A x = b` by plain Gauss-Jordan elimination over rationals.
pub fn solve(a: &[Vec<i64>], b: &[Rational]) -> Vec<Rational> {
    let n = a.len();
    let mut m: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            let mut row: Vec<Rational> = a[i].iter().map(|&x| int(x)).collect();
            row.push(b[i].clone());
            row
        })
        .collect();
    for col in 0..n {
        let p = (col..n)
            .find(|&r| !m[r][col].is_zero())
            .expect("nonsingular");
        m.swap(col, p);
        let piv = m[col][col].clone();
        for x in m[col].iter_mut() {
            *x = &*x / &piv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..=n {
                    let v = &m[col][c] * &f;
                    m[r][c] = &m[r][c] - v;
                }
            }
        }
    }
    m.into_iter().map(|row| row[n].clone()).collect()
}

pub fn matrix(g: &ResolutionGraph) -> Vec<Vec<i64>> {
    let n = g.len();
    let mut a = vec![vec![0i64; n]; n];
    for (i, v) in g.vertices().iter().enumerate() {
        a[i][i] = v.euler;
    }
    for &(x, y) in g.edges() {
        a[x][y] += 1;
        a[y][x] += 1;
    }
    a
}

pub fn zk_oracle(g: &ResolutionGraph) -> Vec<Rational> {
    let rhs: Vec<Rational> = g
        .vertices()
        .iter()
        .map(|v| int(v.euler + 2 - 2 * v.genus as i64))
        .collect();
    solve(&matrix(g), &rhs)
}

pub fn dual_oracle(g: &ResolutionGraph, v: usize) -> Vec<Rational> {
    let rhs: Vec<Rational> = (0..g.len())
        .map(|i| if i == v { int(-1) } else { int(0) })
        .collect();
    solve(&matrix(g), &rhs)
}

fn pair(a: &[Vec<i64>], x: &[Rational], y: &[Rational]) -> Rational {
    let mut s = Rational::zero();
    for i in 0..x.len() {
        for j in 0..y.len() {
            if a[i][j] != 0 {
                s += &x[i] * &y[j] * int(a[i][j]);
            }
        }
    }
    s
}

pub fn chi_oracle(g: &ResolutionGraph, l: &[Rational]) -> Rational {
    let zk = zk_oracle(g);
    let diff: Vec<Rational> = zk.iter().zip(l).map(|(a, b)| a - b).collect();
    pair(&matrix(g), &diff, l) / int(2)
}

/// `m(c)` for `c > 0` with `L(c - eps)` taken literally at a tiny rational
/// `eps` below every gap between candidate values.
pub fn mult_oracle(g: &ResolutionGraph, f: &[i64], c: &Rational) -> i64 {
    let zk = zk_oracle(g);
    let den: i64 = zk
        .iter()
        .map(|k| k.denom().clone())
        .fold(num_bigint::BigInt::one(), num_integer::lcm)
        .try_into()
        .unwrap();
    let fmax = *f.iter().max().unwrap();
    let eps = rat(
        1,
        4 * den * fmax * fmax * (c.denom().try_into().unwrap_or(1i64)).max(1),
    );
    let at = |t: &Rational| -> Vec<Rational> {
        zk.iter()
            .zip(f)
            .map(|(k, &m)| (k + t * int(m)).floor())
            .collect()
    };
    let l = at(c);
    let lm = at(&(c - eps));
    let chi = |x: &[Rational]| chi_oracle(g, x);
    let d = chi(&l) - chi(&lm);
    assert!(d.is_integer());
    d.to_integer().try_into().unwrap()
}

/// All jumping candidates in `(lo, hi]` by scanning a fine grid.
pub fn candidates_oracle(
    g: &ResolutionGraph,
    f: &[i64],
    lo: &Rational,
    hi: &Rational,
) -> Vec<Rational> {
    let zk = zk_oracle(g);
    let mut den = num_bigint::BigInt::one();
    for (k, &m) in zk.iter().zip(f) {
        den = num_integer::lcm(den, k.denom().clone() * num_bigint::BigInt::from(m));
    }
    let den: i64 = den.try_into().unwrap();
    let mut out = Vec::new();
    let start = (lo * int(den)).floor().to_integer();
    let start: i64 = start.try_into().unwrap();
    let end: i64 = (hi * int(den)).floor().to_integer().try_into().unwrap();
    for n in start + 1..=end {
        let c = rat(n, den);
        if zk
            .iter()
            .zip(f)
            .any(|(k, &m)| (k + &c * int(m)).is_integer())
        {
            out.push(c);
        }
    }
    out
}

/// `h(l)`: the sum of the coefficients of `prod_v (1 - t^{E*_v})^{kappa_v - 2}`
/// at integral points not `>= l`, by enumerating tuples `(a_v)` and summing
/// products of binomials. Every entry of every `E*_v` is positive, so a point
/// below `l_i` in coordinate `i` has `sum a_v <= l_i / min E*`; that is the
/// enumeration depth.
pub fn hilbert_oracle(g: &ResolutionGraph, l: &[i64]) -> i64 {
    let n = g.len();
    let duals: Vec<Vec<Rational>> = (0..n).map(|v| dual_oracle(g, v)).collect();
    let min = duals.iter().flatten().min().unwrap().clone();
    let top = int(*l.iter().max().unwrap());
    let steps: i64 = (top / min).floor().to_integer().try_into().unwrap();
    let kappa: Vec<i64> = (0..n).map(|v| g.degree(v) as i64 - 2).collect();
    let coeff = |v: usize, a: i64| -> i64 {
        let k = kappa[v];
        if k >= 0 {
            if a > k {
                0
            } else {
                (if a % 2 == 0 { 1 } else { -1 }) * binom(k, a)
            }
        } else {
            binom(a - k - 1, -k - 1)
        }
    };
    let mut total = 0;
    let mut a = vec![0i64; n];
    loop {
        let point: Vec<Rational> = (0..n)
            .map(|i| (0..n).map(|v| &duals[v][i] * int(a[v])).sum())
            .collect();
        if point.iter().all(|x| x.is_integer()) && point.iter().zip(l).any(|(x, &li)| x < &int(li))
        {
            total += (0..n).map(|v| coeff(v, a[v])).product::<i64>();
        }
        // next tuple with sum <= steps
        let mut i = 0;
        loop {
            if i == n {
                return total;
            }
            a[i] += 1;
            if a.iter().sum::<i64>() <= steps {
                break;
            }
            a[i] = 0;
            i += 1;
        }
    }
}

pub fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
