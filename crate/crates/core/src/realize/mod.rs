//! Exact rational line arrangements: combinatorial type, realization of
//! shellable signotopes with prescribed slopes, slope-feasibility LP, and
//! linear interpolation of intercepts.
//!
//! Lines are `y = λ_i x + b_i` with strictly increasing slopes, so line 1 is
//! topmost far to the left.

mod lp;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shelling::{shelling_sequence, Side, ShellingSequence};
use crate::signotope::{all_triples, Sign, Signotope, Triple};

pub use lp::{maximize, LpOutcome};

fn q(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Strictly increasing slopes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SlopeVector(Vec<BigRational>);

impl SlopeVector {
    pub fn new(slopes: Vec<BigRational>) -> Result<SlopeVector> {
        if slopes.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidSlopes("slopes must be strictly increasing".into()));
        }
        Ok(SlopeVector(slopes))
    }

    /// The slopes `1, 2, …, n`.
    pub fn standard(n: usize) -> SlopeVector {
        SlopeVector((1..=n as i64).map(q).collect())
    }

    /// Parses rationals written as `p` or `p/q`.
    pub fn parse<S: AsRef<str>>(items: &[S]) -> Result<SlopeVector> {
        SlopeVector::new(items.iter().map(|s| parse_rational(s.as_ref())).collect::<Result<_>>()?)
    }

    /// Random integer-over-small-denominator slopes, sorted and distinct.
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> SlopeVector {
        loop {
            let mut v: Vec<BigRational> = (0..n)
                .map(|_| {
                    BigRational::new(BigInt::from(rng.gen_range(-50i64..=50)), BigInt::from(rng.gen_range(1i64..=7)))
                })
                .collect();
            v.sort();
            v.dedup();
            if v.len() == n {
                return SlopeVector(v);
            }
        }
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[BigRational] {
        &self.0
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    s.trim().parse::<BigRational>().map_err(|e| Error::Malformed(format!("bad rational {s:?}: {e}")))
}

/// A simple arrangement of non-vertical lines with prescribed slope order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LineArrangement {
    slopes: SlopeVector,
    intercepts: Vec<BigRational>,
}

/// `(λ_i−λ_j)(b_k−b_i)/(λ_i−λ_k) + b_i − b_j`: positive iff the crossing of
/// lines `i` and `k` lies above line `j`.
fn orientation_value(l: &[BigRational], b: &[BigRational], t: Triple) -> BigRational {
    let [i, j, k] = t.lines();
    (&l[i] - &l[j]) * (&b[k] - &b[i]) / (&l[i] - &l[k]) + &b[i] - &b[j]
}

/// Coefficients `(c_i, c_j, c_k)` of the orientation value as a linear form
/// in the intercepts. They sum to zero.
fn orientation_coefficients(l: &[BigRational], t: Triple) -> [BigRational; 3] {
    let [i, j, k] = t.lines();
    let r = (&l[i] - &l[j]) / (&l[i] - &l[k]);
    [BigRational::one() - &r, -BigRational::one(), r]
}

impl LineArrangement {
    pub fn new(slopes: SlopeVector, intercepts: Vec<BigRational>) -> Result<LineArrangement> {
        if slopes.len() != intercepts.len() {
            return Err(Error::Malformed("one intercept per slope required".into()));
        }
        if slopes.len() < 3 {
            return Err(Error::Malformed("at least three lines required".into()));
        }
        let a = LineArrangement { slopes, intercepts };
        if let Some(t) = a.degenerate_triple() {
            return Err(Error::Degenerate { triple: t.to_string() });
        }
        Ok(a)
    }

    pub fn n(&self) -> usize {
        self.intercepts.len()
    }

    pub fn slopes(&self) -> &SlopeVector {
        &self.slopes
    }

    pub fn intercepts(&self) -> &[BigRational] {
        &self.intercepts
    }

    fn degenerate_triple(&self) -> Option<Triple> {
        all_triples(self.n())
            .into_iter()
            .find(|&t| orientation_value(self.slopes.values(), &self.intercepts, t).is_zero())
    }

    pub fn orientation_value(&self, t: Triple) -> BigRational {
        orientation_value(self.slopes.values(), &self.intercepts, t)
    }

    /// The crossing point of lines `a` and `b`.
    pub fn crossing(&self, a: usize, b: usize) -> (BigRational, BigRational) {
        let l = self.slopes.values();
        let x = (&self.intercepts[b] - &self.intercepts[a]) / (&l[a] - &l[b]);
        let y = &l[a] * &x + &self.intercepts[a];
        (x, y)
    }
}

/// Triple orientations of a line arrangement.
pub fn combinatorial_type(a: &LineArrangement) -> Result<Signotope> {
    let mut signs = Vec::new();
    for t in all_triples(a.n()) {
        let v = a.orientation_value(t);
        if v.is_zero() {
            return Err(Error::Degenerate { triple: t.to_string() });
        }
        signs.push(Sign::from_plus(v.is_positive()));
    }
    Signotope::from_signs(a.n(), &signs)
}

/// Realizes a shellable signotope with the given slopes by inserting lines in
/// reverse shelling order, each one unit beyond the extreme existing crossing.
pub fn realize_shellable(s: &Signotope, seq: Option<&ShellingSequence>, slopes: &SlopeVector) -> Result<LineArrangement> {
    let n = s.n();
    if slopes.len() != n {
        return Err(Error::InvalidSlopes(format!("expected {n} slopes, got {}", slopes.len())));
    }
    let owned;
    let seq = match seq {
        Some(seq) if seq.verify(s) => seq,
        Some(_) => return Err(Error::NotShellable),
        None => {
            owned = shelling_sequence(s).ok_or(Error::NotShellable)?;
            &owned
        }
    };
    let l = slopes.values();
    let mut b = vec![BigRational::zero(); n];
    let mut placed: Vec<usize> = Vec::with_capacity(n);
    for (&line, &side) in seq.order.iter().zip(&seq.sides).rev() {
        let mut extreme: Option<BigRational> = None;
        for (idx, &u) in placed.iter().enumerate() {
            for &v in &placed[idx + 1..] {
                let x = (&b[v] - &b[u]) / (&l[u] - &l[v]);
                let y = &l[u] * &x + &b[u];
                let offset = y - &l[line] * &x;
                extreme = Some(match (extreme, side) {
                    (None, _) => offset,
                    (Some(e), Side::Above) => e.min(offset),
                    (Some(e), Side::Below) => e.max(offset),
                });
            }
        }
        b[line] = match (extreme, side) {
            (None, _) => BigRational::zero(),
            (Some(e), Side::Above) => e - q(1),
            (Some(e), Side::Below) => e + q(1),
        };
        placed.push(line);
    }
    let a = LineArrangement::new(slopes.clone(), b)?;
    if combinatorial_type(&a)? != *s {
        return Err(Error::Internal("realization does not reproduce the signotope".into()));
    }
    Ok(a)
}

/// Decides whether `s` is realizable with the given slopes.
///
/// With `u = b + 1` each orientation becomes the strict inequality
/// `sign · E(u) > 0`. The LP maximizes a common slack `δ ≤ 1` subject to
/// `sign · E(u) ≥ δ` and `0 ≤ u ≤ 2`; the orientation values are homogeneous
/// and translation invariant in the intercepts, so the box loses nothing.
pub fn slope_feasibility(s: &Signotope, slopes: &SlopeVector) -> Result<Option<LineArrangement>> {
    let n = s.n();
    if slopes.len() != n {
        return Err(Error::InvalidSlopes(format!("expected {n} slopes, got {}", slopes.len())));
    }
    let l = slopes.values();
    let nv = n + 1;
    let mut a = Vec::new();
    let mut rhs = Vec::new();
    for t in all_triples(n) {
        let sign = if s.sign(t).is_plus() { q(1) } else { q(-1) };
        let mut row = vec![BigRational::zero(); nv];
        for (var, coef) in t.lines().into_iter().zip(orientation_coefficients(l, t)) {
            row[var] = -(&sign * coef);
        }
        row[n] = q(1);
        a.push(row);
        rhs.push(BigRational::zero());
    }
    for var in 0..nv {
        let mut row = vec![BigRational::zero(); nv];
        row[var] = q(1);
        a.push(row);
        rhs.push(if var == n { q(1) } else { q(2) });
    }
    let mut c = vec![BigRational::zero(); nv];
    c[n] = q(1);
    let x = match maximize(&c, &a, &rhs) {
        LpOutcome::Optimal { x, value } if value.is_positive() => x,
        LpOutcome::Optimal { .. } => return Ok(None),
        LpOutcome::Unbounded => return Err(Error::Internal("bounded LP reported unbounded".into())),
    };
    let b: Vec<BigRational> = x[..n].iter().map(|u| u - q(1)).collect();
    let witness = LineArrangement::new(slopes.clone(), b)?;
    if combinatorial_type(&witness)? != *s {
        return Err(Error::Internal("LP witness does not reproduce the signotope".into()));
    }
    Ok(Some(witness))
}

/// Number of signotopes in `states` realizable with the given slopes.
pub fn count_realizable(states: &[Signotope], slopes: &SlopeVector) -> Result<usize> {
    let mut count = 0;
    for s in states {
        if slope_feasibility(s, slopes)?.is_some() {
            count += 1;
        }
    }
    Ok(count)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MotionEvent {
    pub time: BigRational,
    pub triple: Triple,
}

/// Result of moving intercepts linearly from one arrangement to another.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Motion {
    /// Orientation changes in `(0, 1)`, sorted by time then triple.
    pub events: Vec<MotionEvent>,
    /// Combinatorial types between consecutive event times.
    pub intermediate_types: Vec<Signotope>,
    /// True iff every intermediate type is one of the two endpoint types.
    pub verdict: bool,
    /// True iff no triple changes orientation twice.
    pub flips_at_most_once: bool,
}

/// Interpolates `b(t) = (1−t) b + t b'` between two arrangements with equal
/// slopes and records when each triple changes orientation.
pub fn interpolate_motion(from: &LineArrangement, to: &LineArrangement) -> Result<Motion> {
    if from.slopes != to.slopes {
        return Err(Error::SlopeMismatch);
    }
    let mut events = Vec::new();
    for t in all_triples(from.n()) {
        let e0 = from.orientation_value(t);
        let e1 = to.orientation_value(t);
        if e0.is_positive() != e1.is_positive() {
            let time = &e0 / (&e0 - &e1);
            events.push(MotionEvent { time, triple: t });
        }
    }
    events.sort_by(|a, b| a.time.cmp(&b.time).then(a.triple.cmp(&b.triple)));
    let mut times: Vec<BigRational> = events.iter().map(|e| e.time.clone()).collect();
    times.dedup();
    let mut samples = Vec::with_capacity(times.len() + 1);
    let mut prev = BigRational::zero();
    for t in times.iter().chain(std::iter::once(&BigRational::one())) {
        samples.push((&prev + t) / q(2));
        prev = t.clone();
    }
    let mut intermediate_types = Vec::with_capacity(samples.len());
    for t in samples {
        let b: Vec<BigRational> = from
            .intercepts
            .iter()
            .zip(&to.intercepts)
            .map(|(x, y)| (BigRational::one() - &t) * x + &t * y)
            .collect();
        intermediate_types.push(combinatorial_type(&LineArrangement::new(from.slopes.clone(), b)?)?);
    }
    let ends = [combinatorial_type(from)?, combinatorial_type(to)?];
    let verdict = intermediate_types.iter().all(|s| ends.contains(s));
    let mut seen = std::collections::HashSet::new();
    let flips_at_most_once = events.iter().all(|e| seen.insert(e.triple));
    Ok(Motion { events, intermediate_types, verdict, flips_at_most_once })
}

#[derive(Serialize, Deserialize)]
struct ArrangementJson {
    slopes: Vec<String>,
    intercepts: Vec<String>,
}

impl Serialize for LineArrangement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ArrangementJson {
            slopes: self.slopes.values().iter().map(|v| v.to_string()).collect(),
            intercepts: self.intercepts.iter().map(|v| v.to_string()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LineArrangement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = ArrangementJson::deserialize(d)?;
        let build = || -> Result<LineArrangement> {
            let slopes = SlopeVector::parse(&raw.slopes)?;
            let b = raw.intercepts.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>()?;
            LineArrangement::new(slopes, b)
        };
        build().map_err(serde::de::Error::custom)
    }
}
