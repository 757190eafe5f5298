//! Exact domination polynomials.
//!
//! The coefficient vector counts dominating sets by cardinality. All
//! arithmetic is arbitrary precision: C(24,12) already exceeds 2.7e6 and
//! corpus-scale sums overflow fixed width silently, and exactness is the
//! whole point. Equality is exact coefficient-vector equality; there is no
//! tolerance anywhere in this module.
//!
//! Three routes to the polynomial are provided and cross-checked in tests:
//! a 2^n subset sweep ([`polynomial_bruteforce`]), the join decomposition
//! over complement components ([`polynomial`]), and a closed form for
//! complete multipartite graphs ([`multipartite_closed_form`]).

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::constructions::PartitionSpec;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Hard cap on 2^n subset enumeration; the join decomposition covers every
/// larger instance this toolkit needs.
pub const BRUTE_FORCE_LIMIT: usize = 28;

/// Upper bound on the number of sets a family materializes at once.
const FAMILY_BUDGET: u64 = 10_000_000;

/// Exact binomial coefficient.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// The domination polynomial of a graph of order `n`: `coeffs[i]` counts
/// the dominating sets of cardinality `i`.
///
/// For `n >= 1`, `coeffs[0] = 0` and `coeffs[n] = 1`. The polynomial of
/// the empty graph is identically zero, which makes the join identity
/// `G v empty = G` hold in [`polynomial_join`] with no special-casing.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    n: usize,
    coeffs: Vec<BigUint>,
}

impl Polynomial {
    /// The identically zero polynomial of the empty graph.
    pub fn empty() -> Self {
        Polynomial {
            n: 0,
            coeffs: vec![BigUint::zero()],
        }
    }

    /// Wraps a coefficient vector; `coeffs.len()` must be `n + 1` and the
    /// constant term must be zero.
    pub fn from_coeffs(n: usize, coeffs: Vec<BigUint>) -> Result<Self> {
        if coeffs.len() != n + 1 || !coeffs[0].is_zero() {
            return Err(Error::NotAGraphPolynomial);
        }
        Ok(Polynomial { n, coeffs })
    }

    /// Order of the underlying graph.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    /// Coefficient of `x^i`; zero above the order.
    pub fn coeff(&self, i: usize) -> BigUint {
        self.coeffs.get(i).cloned().unwrap_or_else(BigUint::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Decimal-string coefficients, ascending by cardinality; the exact,
    /// portable interchange form and the atlas key.
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

impl std::fmt::Display for Polynomial {
    /// Renders like `x^5+5x^4+10x^3+7x^2`: descending powers, zero terms
    /// omitted, unit coefficients implicit.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for i in (1..=self.n).rev() {
            let c = &self.coeffs[i];
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            if !c.is_one() {
                write!(f, "{c}")?;
            }
            if i == 1 {
                write!(f, "x")?;
            } else {
                write!(f, "x^{i}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl std::fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Polynomial(n={}, {})", self.n, self)
    }
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("Polynomial", 2)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("coeffs", &self.coeff_strings())?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            n: usize,
            coeffs: Vec<String>,
        }
        let raw = Raw::deserialize(deserializer)?;
        let coeffs = raw
            .coeffs
            .iter()
            .map(|s| s.parse::<BigUint>().map_err(D::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Polynomial::from_coeffs(raw.n, coeffs)
            .map_err(|_| D::Error::custom("invalid polynomial shape"))
    }
}

/// A family of distinct vertex subsets of uniform cardinality `k` over the
/// ground set `0..n`, kept sorted for deterministic output.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetFamily {
    n: usize,
    k: usize,
    sets: Vec<VertexSet>,
}

impl SetFamily {
    pub fn new(n: usize, k: usize, mut sets: Vec<VertexSet>) -> Result<Self> {
        for s in &sets {
            if s.len() != k {
                return Err(Error::NonUniformFamily {
                    expected: k,
                    got: s.len(),
                });
            }
            if let Some(v) = s.iter().find(|&v| v >= n) {
                return Err(Error::SetOutOfRange(v));
            }
        }
        sets.sort_unstable();
        sets.dedup();
        Ok(SetFamily { n, k, sets })
    }

    /// Ground set size.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Member cardinality.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn sets(&self) -> &[VertexSet] {
        &self.sets
    }

    pub fn contains(&self, s: VertexSet) -> bool {
        self.sets.binary_search(&s).is_ok()
    }

    /// Union of all members.
    pub fn ground_union(&self) -> VertexSet {
        self.sets
            .iter()
            .fold(VertexSet::EMPTY, |acc, &s| acc.union(s))
    }
}

/// True iff the closed neighborhoods of `s` cover every vertex.
pub fn is_dominating(g: &Graph, s: VertexSet) -> bool {
    let full = g.vertex_set().bits();
    let mut covered = 0u64;
    for v in s.intersection(g.vertex_set()).iter() {
        covered |= g.closed_neighborhood(v).bits();
    }
    covered == full
}

/// Closed-neighborhood masks indexed by vertex.
fn closed_masks(g: &Graph) -> Vec<u64> {
    (0..g.n()).map(|v| g.closed_neighborhood(v).bits()).collect()
}

/// Coverage mask of every subset of an index range, built incrementally:
/// `table[m] = table[m without lowest bit] | closed[lowest bit]`.
fn cover_table(closed: &[u64], offset: usize, width: usize) -> Vec<u64> {
    let mut table = vec![0u64; 1 << width];
    for m in 1..1usize << width {
        let low = m.trailing_zeros() as usize;
        table[m] = table[m & (m - 1)] | closed[offset + low];
    }
    table
}

/// Exact domination polynomial by a single pass over all 2^n subsets in
/// increasing mask order, counting by popcount. Requires `n <= 28`.
pub fn polynomial_bruteforce(g: &Graph) -> Result<Polynomial> {
    let n = g.n();
    if n > BRUTE_FORCE_LIMIT {
        return Err(Error::BruteForceBudget(n));
    }
    if n == 0 {
        return Ok(Polynomial::empty());
    }
    let closed = closed_masks(g);
    let full = g.vertex_set().bits();
    // Coverage of a subset splits over its low and high halves, so two
    // half-width tables replace a 2^n intermediate.
    let lo_width = n / 2;
    let hi_width = n - lo_width;
    let lo = cover_table(&closed, 0, lo_width);
    let hi = cover_table(&closed, lo_width, hi_width);

    let count_range = |hi_range: std::ops::Range<usize>| -> Vec<u64> {
        let mut counts = vec![0u64; n + 1];
        for h in hi_range {
            let h_cover = hi[h];
            let h_pop = (h as u64).count_ones() as usize;
            for (l, &l_cover) in lo.iter().enumerate() {
                if h_cover | l_cover == full {
                    counts[h_pop + (l as u64).count_ones() as usize] += 1;
                }
            }
        }
        counts
    };

    let counts = if n >= 20 {
        let chunks = (rayon::current_num_threads() * 4).max(1).min(hi.len());
        let step = hi.len().div_ceil(chunks);
        (0..hi.len())
            .into_par_iter()
            .step_by(step)
            .map(|start| count_range(start..(start + step).min(hi.len())))
            .reduce(
                || vec![0u64; n + 1],
                |mut a, b| {
                    for (x, y) in a.iter_mut().zip(b) {
                        *x += y;
                    }
                    a
                },
            )
    } else {
        count_range(0..hi.len())
    };

    let mut coeffs: Vec<BigUint> = counts.into_iter().map(BigUint::from).collect();
    coeffs[0] = BigUint::zero();
    Polynomial::from_coeffs(n, coeffs)
}

/// Polynomial of the join from the factors' polynomials:
/// the cross terms count subsets meeting both sides, and subsets confined
/// to one side dominate the join iff they dominate that side.
pub fn polynomial_join(pg: &Polynomial, ph: &Polynomial) -> Result<Polynomial> {
    let (ng, nh) = (pg.n(), ph.n());
    let n = ng + nh;
    if n > crate::graph::MAX_VERTICES {
        return Err(Error::JoinTooLarge(n));
    }
    let mut coeffs = vec![BigUint::zero(); n + 1];
    for (i, c) in coeffs.iter_mut().enumerate().skip(1) {
        let mut acc = pg.coeff(i) + ph.coeff(i);
        let j_min = 1.max(i.saturating_sub(nh));
        let j_max = ng.min(i - 1);
        for j in j_min..=j_max {
            acc += binomial(ng as u64, j as u64) * binomial(nh as u64, (i - j) as u64);
        }
        *c = acc;
    }
    Polynomial::from_coeffs(n, coeffs)
}

/// Exact domination polynomial for any order whose join factors fit the
/// brute-force budget.
///
/// The join factors of a graph are the connected components of its
/// complement; each factor is swept by brute force and the factors are
/// combined with [`polynomial_join`].
pub fn polynomial(g: &Graph) -> Result<Polynomial> {
    let complement = g.complement();
    let mut acc = Polynomial::empty();
    for part in complement.connected_components() {
        let factor = g.induced_subgraph(part);
        if factor.n() > BRUTE_FORCE_LIMIT {
            return Err(Error::FactorTooLarge(factor.n()));
        }
        acc = polynomial_join(&acc, &polynomial_bruteforce(&factor)?)?;
    }
    Ok(acc)
}

/// Closed form for a complete multipartite graph: the non-dominating sets
/// are exactly the proper subsets of the color classes, so
/// `coeffs[i] = C(n,i) - sum over classes of size a > i of C(a,i)`.
pub fn multipartite_closed_form(spec: &PartitionSpec) -> Polynomial {
    let n = spec.order();
    let mut coeffs = vec![BigUint::zero(); n + 1];
    for i in 1..=n {
        let mut c = binomial(n as u64, i as u64);
        for &a in spec.parts() {
            if i < a as usize {
                c -= binomial(a as u64, i as u64);
            }
        }
        coeffs[i] = c;
    }
    Polynomial::from_coeffs(n, coeffs).expect("closed form has zero constant term")
}

/// All non-dominating `k`-subsets. Materializes only when `C(n,k)` is at
/// most 10^7; larger requests error rather than thrash.
pub fn nondominating_sets(g: &Graph, k: usize) -> Result<SetFamily> {
    let n = g.n();
    if n > BRUTE_FORCE_LIMIT {
        return Err(Error::BruteForceBudget(n));
    }
    let total = binomial(n as u64, k as u64);
    if total > BigUint::from(FAMILY_BUDGET) {
        return Err(Error::FamilyTooLarge {
            n,
            k,
            count: total.to_string(),
        });
    }
    let mut sets = Vec::new();
    if k > n {
        return SetFamily::new(n, k, sets);
    }
    let closed = closed_masks(g);
    let full = g.vertex_set().bits();
    // Gosper's hack walks the k-subsets in increasing mask order.
    let mut mask: u64 = if k == 0 { 0 } else { (1u64 << k) - 1 };
    loop {
        let covered = VertexSet::from_bits(mask)
            .iter()
            .fold(0u64, |acc, v| acc | closed[v]);
        if covered != full {
            sets.push(VertexSet::from_bits(mask));
        }
        if k == 0 || mask >= (full ^ (full >> k)) {
            break;
        }
        let c = mask & mask.wrapping_neg();
        let r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
    SetFamily::new(n, k, sets)
}

/// Recovers `(l, delta)` from a nonempty graph's polynomial, where `l` is
/// the least cardinality at which every subset dominates and `delta` is
/// the minimum degree `n - l` of any graph with this polynomial.
pub fn min_degree_from_polynomial(p: &Polynomial) -> Result<(usize, usize)> {
    let n = p.n();
    if n == 0 {
        return Err(Error::NotAGraphPolynomial);
    }
    for j in 1..=n {
        if p.coeff(j) == binomial(n as u64, j as u64) {
            return Ok((j, n - j));
        }
    }
    Err(Error::NotAGraphPolynomial)
}

/// Lower bound `C(n, l-1) - d(G, l-1)` on the number of minimum-degree
/// vertices in any graph with this polynomial.
pub fn forced_min_degree_count(p: &Polynomial) -> Result<u64> {
    let (l, _) = min_degree_from_polynomial(p)?;
    let n = p.n() as u64;
    let bound = binomial(n, l as u64 - 1) - p.coeff(l - 1);
    Ok(u64::try_from(&bound).expect("count below C(64,32) fits in u64"))
}
