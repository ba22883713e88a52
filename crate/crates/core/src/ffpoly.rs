//! Splitting of rational primes: distinct-degree factorisation over prime
//! fields, residue-degree patterns, places of bounded norm and the relative
//! split/inert/ramified class of a place of `k` in `ell`.

use crate::arith::{is_prime, primes_up_to};
use crate::datasets::{FieldPairRecord, NumberFieldRecord};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

/// Polynomial over `F_p` with ascending coefficients; the leading one is nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeFieldPoly {
    pub p: u64,
    pub coeffs: Vec<u64>,
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, b, p);
        }
        b = mulmod(b, b, p);
        e >>= 1;
    }
    r
}

fn invmod(a: u64, p: u64) -> u64 {
    powmod(a, p - 2, p)
}

impl PrimeFieldPoly {
    pub fn new(p: u64, coeffs: Vec<u64>) -> Self {
        let mut c: Vec<u64> = coeffs.into_iter().map(|x| x % p).collect();
        while c.last() == Some(&0) {
            c.pop();
        }
        PrimeFieldPoly { p, coeffs: c }
    }

    /// Reduction of an integer polynomial modulo `p`.
    pub fn from_integer_poly(coeffs: &[BigInt], p: u64) -> Self {
        let pb = BigInt::from(p);
        let c = coeffs.iter().map(|x| x.mod_floor(&pb).to_u64().expect("residue fits")).collect();
        Self::new(p, c)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn derivative(&self) -> Self {
        let c = self.coeffs.iter().enumerate().skip(1).map(|(i, &a)| mulmod(a, i as u64 % self.p, self.p)).collect();
        Self::new(self.p, c)
    }

    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None => self.clone(),
            Some(&lc) => {
                let inv = invmod(lc, self.p);
                Self::new(self.p, self.coeffs.iter().map(|&a| mulmod(a, inv, self.p)).collect())
            }
        }
    }

    /// Quotient and remainder.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let p = self.p;
        let dd = d.degree().expect("division by the zero polynomial");
        let inv = invmod(d.coeffs[dd], p);
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Self::new(p, vec![]), self.clone());
        }
        let mut q = vec![0u64; r.len() - dd];
        for k in (dd..r.len()).rev() {
            let c = mulmod(r[k], inv, p);
            q[k - dd] = c;
            if c != 0 {
                for (i, &di) in d.coeffs.iter().enumerate() {
                    let t = mulmod(c, di, p);
                    r[k - dd + i] = (r[k - dd + i] + p - t) % p;
                }
            }
        }
        r.truncate(dd);
        (Self::new(p, q), Self::new(p, r))
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let c = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0);
                let b = o.coeffs.get(i).copied().unwrap_or(0);
                (a + self.p - b) % self.p
            })
            .collect();
        Self::new(self.p, c)
    }

    pub fn is_squarefree(&self) -> bool {
        match self.degree() {
            None => false,
            Some(0) => true,
            Some(_) => {
                let d = self.derivative();
                !d.is_zero() && self.gcd(&d).degree() == Some(0)
            }
        }
    }
}

/// Arithmetic in `F_p[x] / (f)` for a monic `f`.
struct QuotientRing {
    p: u64,
    f: Vec<u64>,
    n: usize,
    lazy: bool,
}

impl QuotientRing {
    fn new(f: &PrimeFieldPoly) -> Self {
        let n = f.degree().expect("nonzero modulus");
        let p = f.p;
        // products are accumulated without reduction when they cannot overflow
        let lazy = (p as u128) * (p as u128) * (4 * n as u128 + 4) < (1u128 << 64);
        QuotientRing { p, f: f.coeffs.clone(), n, lazy }
    }

    fn mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let (p, n) = (self.p, self.n);
        let mut r = vec![0u64; 2 * n];
        if self.lazy {
            for (i, &x) in a.iter().enumerate() {
                if x != 0 {
                    for (j, &y) in b.iter().enumerate() {
                        r[i + j] += x * y;
                    }
                }
            }
            for k in (n..2 * n - 1).rev() {
                let c = r[k] % p;
                if c != 0 {
                    for i in 0..n {
                        r[k - n + i] = (r[k - n + i] + c * (p - self.f[i])) % p;
                    }
                }
            }
            r.truncate(n);
            r.iter_mut().for_each(|x| *x %= p);
        } else {
            for (i, &x) in a.iter().enumerate() {
                for (j, &y) in b.iter().enumerate() {
                    r[i + j] = (r[i + j] + mulmod(x, y, p)) % p;
                }
            }
            for k in (n..2 * n - 1).rev() {
                let c = r[k];
                if c != 0 {
                    for i in 0..n {
                        r[k - n + i] = (r[k - n + i] + mulmod(c, p - self.f[i], p)) % p;
                    }
                }
            }
            r.truncate(n);
        }
        r
    }

    fn x_pow(&self, mut e: u64) -> Vec<u64> {
        let n = self.n;
        let mut result = vec![0u64; n];
        result[0] = 1;
        let mut base = vec![0u64; n];
        if n == 1 {
            base[0] = (self.p - self.f[0]) % self.p;
        } else {
            base[1] = 1;
        }
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(&result, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        result
    }
}

/// Degrees of the irreducible factors of a squarefree polynomial, as
/// sorted `(degree, count)` pairs.
pub fn ddf_degree_multiset(poly: &PrimeFieldPoly) -> Result<Vec<(u32, u32)>> {
    let p = poly.p;
    if !is_prime(p) || p >= 1 << 32 {
        return Err(Error::Domain(format!("modulus {p} must be a prime below 2^32")));
    }
    if !poly.is_squarefree() {
        return Err(Error::NotSquarefree { p });
    }
    let f = poly.monic();
    let n = f.degree().unwrap_or(0);
    if n == 0 {
        return Ok(Vec::new());
    }
    if n == 1 {
        return Ok(vec![(1, 1)]);
    }
    let ring = QuotientRing::new(&f);
    // Frobenius matrix: row j is x^(p j) mod f
    let xp = ring.x_pow(p);
    let mut rows = Vec::with_capacity(n);
    let mut cur = vec![0u64; n];
    cur[0] = 1;
    for _ in 0..n {
        rows.push(cur.clone());
        cur = ring.mul(&cur, &xp);
    }
    let frob = |h: &[u64]| -> Vec<u64> {
        let mut out = vec![0u64; n];
        for (j, &hj) in h.iter().enumerate() {
            if hj != 0 {
                for (o, &r) in out.iter_mut().zip(&rows[j]) {
                    *o = (*o + mulmod(hj, r, p)) % p;
                }
            }
        }
        out
    };
    let x = PrimeFieldPoly::new(p, vec![0, 1]);
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut h = xp.clone();
    let mut i = 1usize;
    loop {
        let dr = rest.degree().unwrap_or(0);
        if dr == 0 {
            break;
        }
        if dr < 2 * i {
            out.push((dr as u32, 1));
            break;
        }
        let hx = PrimeFieldPoly::new(p, h.clone()).sub(&x);
        let g = rest.gcd(&hx);
        let dg = g.degree().unwrap_or(0);
        if dg > 0 {
            out.push((i as u32, (dg / i) as u32));
            rest = rest.div_rem(&g).0;
        }
        h = frob(&h);
        i += 1;
    }
    out.sort_unstable();
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PatternSource {
    Computed,
    Bundled,
}

/// The places over `p`: sorted `(e, f)` pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplittingPattern {
    pub p: u64,
    pub places: Vec<(u32, u32)>,
    pub source: PatternSource,
}

impl SplittingPattern {
    pub fn degree(&self) -> u32 {
        self.places.iter().map(|&(e, f)| e * f).sum()
    }

    /// Residue degrees of the places, sorted.
    pub fn residue_degrees(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.places.iter().map(|&(_, f)| f).collect();
        v.sort_unstable();
        v
    }
}

/// Splitting of `p` in `field`: bundled data where `p` divides the
/// polynomial discriminant, distinct-degree factorisation elsewhere.
pub fn splitting_pattern(field: &NumberFieldRecord, p: u64) -> Result<SplittingPattern> {
    if let Some(r) = field.ramified_at(p) {
        let mut places = r.factors.clone();
        places.sort_unstable();
        return Ok(SplittingPattern { p, places, source: PatternSource::Bundled });
    }
    if !(&field.disc % BigInt::from(p)).is_zero() {
        let fp = PrimeFieldPoly::from_integer_poly(&field.poly, p);
        let degrees = ddf_degree_multiset(&fp).map_err(|e| match e {
            Error::NotSquarefree { p } => Error::MissingRamifiedData { label: field.label.clone(), p },
            other => other,
        })?;
        let mut places = Vec::new();
        for (d, c) in degrees {
            places.extend(std::iter::repeat_n((1, d), c as usize));
        }
        places.sort_unstable();
        return Ok(SplittingPattern { p, places, source: PatternSource::Computed });
    }
    Err(Error::MissingRamifiedData { label: field.label.clone(), p })
}

/// Residue degrees of the places over `p` as a compact list (no `e`).
pub fn residue_degrees(field: &NumberFieldRecord, p: u64) -> Result<Vec<u32>> {
    Ok(splitting_pattern(field, p)?.residue_degrees())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RelativePlaceClass {
    SplitInL,
    InertInL,
    RamifiedInL,
}

impl RelativePlaceClass {
    pub fn name(self) -> &'static str {
        match self {
            RelativePlaceClass::SplitInL => "split",
            RelativePlaceClass::InertInL => "inert",
            RelativePlaceClass::RamifiedInL => "ramified",
        }
    }
}

/// Legendre symbol `(a / p)` for an odd prime `p`.
pub fn legendre(a: i64, p: u64) -> i32 {
    let r = a.rem_euclid(p as i64) as u64;
    if r == 0 {
        return 0;
    }
    if powmod(r, (p - 1) / 2, p) == 1 {
        1
    } else {
        -1
    }
}

/// Behaviour of `p` in `Q(sqrt(-a))` for squarefree `a > 0`.
pub fn kronecker_class(a: u64, p: u64) -> RelativePlaceClass {
    let d = if a % 4 == 3 { a } else { 4 * a };
    if d % p == 0 {
        return RelativePlaceClass::RamifiedInL;
    }
    let split = if p == 2 {
        (-(a as i64)).rem_euclid(8) == 1
    } else {
        legendre(-(a as i64), p) == 1
    };
    if split {
        RelativePlaceClass::SplitInL
    } else {
        RelativePlaceClass::InertInL
    }
}

/// A finite place of `k`, identified by its prime, `(e, f)` and a tag
/// numbering places with equal `(e, f)` over the same prime.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PlaceOfK {
    pub p: u64,
    pub f: u32,
    pub e: u32,
    pub multiplicity_tag: u32,
    pub q: BigInt,
}

impl PlaceOfK {
    pub fn q_u64(&self) -> Option<u64> {
        self.q.to_u64()
    }
}

/// Places of `field` over `p`, in canonical order.
pub fn places_over(field: &NumberFieldRecord, p: u64) -> Result<Vec<PlaceOfK>> {
    let pat = splitting_pattern(field, p)?;
    let mut places: Vec<(u32, u32)> = pat.places.iter().map(|&(e, f)| (f, e)).collect();
    places.sort_unstable();
    let mut out: Vec<PlaceOfK> = Vec::new();
    for (f, e) in places {
        let tag = out.iter().filter(|pl| pl.f == f && pl.e == e).count() as u32;
        out.push(PlaceOfK { p, f, e, multiplicity_tag: tag, q: num_traits::pow(BigInt::from(p), f as usize) });
    }
    Ok(out)
}

/// All places with norm `q = p^f <= bound`, ordered by `p`, then `f`, then tag.
pub fn places_up_to_norm(field: &NumberFieldRecord, bound: u64) -> Result<Vec<PlaceOfK>> {
    let mut out = Vec::new();
    let b = BigInt::from(bound);
    for p in primes_up_to(bound) {
        out.extend(places_over(field, p)?.into_iter().filter(|pl| pl.q <= b));
    }
    Ok(out)
}

fn image(class: RelativePlaceClass, e: u32, f: u32) -> Vec<(u32, u32)> {
    match class {
        RelativePlaceClass::SplitInL => vec![(e, f), (e, f)],
        RelativePlaceClass::InertInL => vec![(e, 2 * f)],
        RelativePlaceClass::RamifiedInL => vec![(2 * e, f)],
    }
}

const CLASSES: [RelativePlaceClass; 3] =
    [RelativePlaceClass::SplitInL, RelativePlaceClass::InertInL, RelativePlaceClass::RamifiedInL];

/// All assignments of a relative class to each place of `k` over `p`
/// that reproduce the places of `ell` over `p`.
pub fn consistent_assignments(pair: &FieldPairRecord, p: u64) -> Result<(Vec<(u32, u32)>, Vec<Vec<RelativePlaceClass>>)> {
    let kpat = splitting_pattern(&pair.k, p)?;
    let lpat = splitting_pattern(&pair.ell, p)?;
    let kplaces = kpat.places.clone();
    let mut target = lpat.places.clone();
    target.sort_unstable();
    let ramifies = (&pair.rel_disc_norm % BigInt::from(p)).is_zero();
    let n = kplaces.len();
    let mut found = Vec::new();
    let total = 3usize.pow(n as u32);
    for code in 0..total {
        let mut c = code;
        let mut assign = Vec::with_capacity(n);
        let mut img = Vec::new();
        for &(e, f) in &kplaces {
            let cl = CLASSES[c % 3];
            c /= 3;
            assign.push(cl);
            img.extend(image(cl, e, f));
        }
        img.sort_unstable();
        let has_ram = assign.contains(&RelativePlaceClass::RamifiedInL);
        if img == target && has_ram == ramifies {
            found.push(assign);
        }
    }
    if found.is_empty() {
        return Err(Error::InconsistentSplitting {
            pair: pair.label.clone(),
            message: format!("places of ell over {p} {:?} do not match places of k {:?}", lpat.places, kplaces),
        });
    }
    Ok((kplaces, found))
}

/// Relative class of a place of `k` in `ell`.
pub fn relative_class(pair: &FieldPairRecord, place: &PlaceOfK) -> Result<RelativePlaceClass> {
    let (kplaces, assignments) = consistent_assignments(pair, place.p)?;
    let idx: Vec<usize> =
        kplaces.iter().enumerate().filter(|(_, &(e, f))| e == place.e && f == place.f).map(|(i, _)| i).collect();
    if idx.len() <= place.multiplicity_tag as usize {
        return Err(Error::Domain(format!(
            "pair {}: no place over {} with e={} f={} tag={}",
            pair.label, place.p, place.e, place.f, place.multiplicity_tag
        )));
    }
    let mut classes: Vec<RelativePlaceClass> = assignments.iter().flat_map(|a| idx.iter().map(|&i| a[i])).collect();
    classes.sort_unstable();
    classes.dedup();
    if classes.len() == 1 {
        Ok(classes[0])
    } else {
        Err(Error::AmbiguousAttribution { pair: pair.label.clone(), p: place.p, f: place.f })
    }
}

/// Places of `k` over `p` together with their relative class.
pub fn classified_places_over(pair: &FieldPairRecord, p: u64) -> Result<Vec<(PlaceOfK, RelativePlaceClass)>> {
    places_over(&pair.k, p)?
        .into_iter()
        .map(|pl| relative_class(pair, &pl).map(|c| (pl, c)))
        .collect()
}

/// Places of `k` over `p` with a relative class each, requiring only that
/// every consistent assignment gives the same multiset of `(e, f, class)`.
/// Places with equal `(e, f)` are indistinguishable in the bundled data, so
/// classes are handed out to them in sorted order.
pub fn classified_places_up_to_symmetry(pair: &FieldPairRecord, p: u64) -> Result<Vec<(PlaceOfK, RelativePlaceClass)>> {
    let (kplaces, assignments) = consistent_assignments(pair, p)?;
    let multiset = |a: &Vec<RelativePlaceClass>| {
        let mut m: Vec<(u32, u32, RelativePlaceClass)> =
            kplaces.iter().zip(a).map(|(&(e, f), &c)| (e, f, c)).collect();
        m.sort_unstable();
        m
    };
    let first = multiset(&assignments[0]);
    if assignments.iter().any(|a| multiset(a) != first) {
        let f = kplaces.first().map_or(1, |&(_, f)| f);
        return Err(Error::AmbiguousAttribution { pair: pair.label.clone(), p, f });
    }
    places_over(&pair.k, p)?
        .into_iter()
        .map(|pl| {
            let class = first
                .iter()
                .filter(|&&(e, f, _)| e == pl.e && f == pl.f)
                .nth(pl.multiplicity_tag as usize)
                .map(|&(_, _, c)| c)
                .ok_or_else(|| Error::Domain(format!("pair {}: no place over {p} matching {pl:?}", pair.label)))?;
            Ok((pl, class))
        })
        .collect()
}

/// Whether `n` (possibly negative) is divisible by `p`.
pub fn divides(p: u64, n: &BigInt) -> bool {
    (n.abs() % BigInt::from(p)).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(p: u64, c: &[u64]) -> PrimeFieldPoly {
        PrimeFieldPoly::new(p, c.to_vec())
    }

    #[test]
    fn ddf_small_cases() {
        assert_eq!(ddf_degree_multiset(&poly(5, &[1, 0, 1])).unwrap(), vec![(1, 2)]);
        assert_eq!(ddf_degree_multiset(&poly(3, &[1, 0, 1])).unwrap(), vec![(2, 1)]);
        assert_eq!(ddf_degree_multiset(&poly(7, &[0, 1])).unwrap(), vec![(1, 1)]);
        assert!(matches!(ddf_degree_multiset(&poly(5, &[1, 2, 1])), Err(Error::NotSquarefree { p: 5 })));
        // x^4 + 1 mod 3 splits into two quadratics
        assert_eq!(ddf_degree_multiset(&poly(3, &[1, 0, 0, 0, 1])).unwrap(), vec![(2, 2)]);
        // (x - 1)(x^2 + x + 1)... over F_5 x^3 - 1 = (x - 1)(x^2 + x + 1), the quadratic irreducible
        assert_eq!(ddf_degree_multiset(&poly(5, &[4, 0, 0, 1])).unwrap(), vec![(1, 1), (2, 1)]);
    }

    #[test]
    fn kronecker_rules() {
        assert_eq!(kronecker_class(23, 2), RelativePlaceClass::SplitInL);
        assert_eq!(kronecker_class(7, 7), RelativePlaceClass::RamifiedInL);
        assert_eq!(kronecker_class(2, 3), RelativePlaceClass::SplitInL);
        assert_eq!(kronecker_class(1, 2), RelativePlaceClass::RamifiedInL);
        assert_eq!(kronecker_class(3, 2), RelativePlaceClass::InertInL);
    }
}
