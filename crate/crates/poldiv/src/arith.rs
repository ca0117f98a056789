//! Shared exact-arithmetic helpers: big integers, big rationals, and the
//! handful of vector operations the geometric modules lean on.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Zero};

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn int(n: i64) -> Int {
    Int::from(n)
}

pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(int(p), int(q))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(int(n))
}

pub fn int_vec(v: &[i64]) -> Vec<Int> {
    v.iter().map(|&x| int(x)).collect()
}

pub fn rat_vec(v: &[(i64, i64)]) -> Vec<Rat> {
    v.iter().map(|&(p, q)| rat(p, q)).collect()
}

pub fn to_rat_vec(v: &[Int]) -> Vec<Rat> {
    v.iter().map(|x| Rat::from_integer(x.clone())).collect()
}

pub fn zero_int_vec(n: usize) -> Vec<Int> {
    vec![Int::zero(); n]
}

pub fn zero_rat_vec(n: usize) -> Vec<Rat> {
    vec![Rat::zero(); n]
}

pub fn is_zero_vec(v: &[Int]) -> bool {
    v.iter().all(|x| x.is_zero())
}

pub fn dot_int(a: &[Int], b: &[Int]) -> Int {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn dot_int_rat(a: &[Int], b: &[Rat]) -> Rat {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| Rat::from_integer(x.clone()) * y)
        .sum()
}

pub fn dot_rat(a: &[Rat], b: &[Rat]) -> Rat {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn add_int(a: &[Int], b: &[Int]) -> Vec<Int> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_int(a: &[Int], b: &[Int]) -> Vec<Int> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn neg_int(a: &[Int]) -> Vec<Int> {
    a.iter().map(|x| -x).collect()
}

pub fn scale_int(k: &Int, a: &[Int]) -> Vec<Int> {
    a.iter().map(|x| k * x).collect()
}

pub fn add_rat(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_rat(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale_rat(k: &Rat, a: &[Rat]) -> Vec<Rat> {
    a.iter().map(|x| k * x).collect()
}

pub fn gcd_vec(v: &[Int]) -> Int {
    v.iter().fold(Int::zero(), |g, x| g.gcd(x))
}

/// Divides an integer vector by the gcd of its entries. The zero vector is
/// returned unchanged; the direction (sign) of the vector is preserved.
pub fn primitive(v: &[Int]) -> Vec<Int> {
    let g = gcd_vec(v);
    if g.is_zero() || g.is_one() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &g).collect()
}

/// Scales a rational vector to the primitive integer vector pointing the
/// same way.
pub fn primitive_from_rat(v: &[Rat]) -> Vec<Int> {
    let lcm = v
        .iter()
        .fold(Int::one(), |l, x| l.lcm(x.denom()));
    let ints: Vec<Int> = v
        .iter()
        .map(|x| x.numer() * (&lcm / x.denom()))
        .collect();
    primitive(&ints)
}

pub fn rat_is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

pub fn rat_vec_is_integer(v: &[Rat]) -> bool {
    v.iter().all(rat_is_integer)
}

pub fn rat_vec_to_int(v: &[Rat]) -> Option<Vec<Int>> {
    if rat_vec_is_integer(v) {
        Some(v.iter().map(|x| x.numer().clone()).collect())
    } else {
        None
    }
}

pub fn floor_rat(r: &Rat) -> Int {
    r.floor().to_integer()
}

/// Serializes a rational in lowest terms as "p" or "p/q" with q > 1.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses "p" or "p/q". The denominator must be positive.
pub fn parse_rat(s: &str) -> Result<Rat, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let p: Int = num
        .parse()
        .map_err(|_| format!("bad rational numerator in {s:?}"))?;
    let q: Int = den
        .parse()
        .map_err(|_| format!("bad rational denominator in {s:?}"))?;
    if q <= Int::zero() {
        return Err(format!("rational denominator must be positive in {s:?}"));
    }
    Ok(Rat::new(p, q))
}

pub fn format_rat_vec(v: &[Rat]) -> String {
    let parts: Vec<String> = v.iter().map(format_rat).collect();
    format!("({})", parts.join(", "))
}

pub fn format_int_vec(v: &[Int]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}
