//! 3-signotopes: sign maps on triples of `[n]` with monotone 4-set packets.
//!
//! Lines are 0-based internally and 1-based in every textual form.

use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Orientation of a triple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub fn is_plus(self) -> bool {
        self == Sign::Plus
    }

    pub fn from_plus(plus: bool) -> Sign {
        if plus {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn flipped(self) -> Sign {
        Sign::from_plus(!self.is_plus())
    }

    pub fn symbol(self) -> char {
        if self.is_plus() {
            '+'
        } else {
            '-'
        }
    }
}

/// A triple `i < j < k` of 0-based line indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triple {
    pub i: u8,
    pub j: u8,
    pub k: u8,
}

impl Triple {
    /// Builds a triple from three distinct indices in any order.
    pub fn new(a: usize, b: usize, c: usize) -> Option<Triple> {
        let mut v = [a, b, c];
        v.sort_unstable();
        if v[0] == v[1] || v[1] == v[2] || v[2] > u8::MAX as usize {
            return None;
        }
        Some(Triple { i: v[0] as u8, j: v[1] as u8, k: v[2] as u8 })
    }

    pub fn lines(self) -> [usize; 3] {
        [self.i as usize, self.j as usize, self.k as usize]
    }

    pub fn contains(self, line: usize) -> bool {
        self.lines().contains(&line)
    }

    /// The two lines of the triple other than `line`.
    pub fn others(self, line: usize) -> Option<(usize, usize)> {
        let [a, b, c] = self.lines();
        if line == a {
            Some((b, c))
        } else if line == b {
            Some((a, c))
        } else if line == c {
            Some((a, b))
        } else {
            None
        }
    }

    /// Number of lines shared with `other`.
    pub fn shared_lines(self, other: Triple) -> usize {
        self.lines().iter().filter(|&&l| other.contains(l)).count()
    }

    /// 1-based labels.
    pub fn labels(self) -> [usize; 3] {
        [self.i as usize + 1, self.j as usize + 1, self.k as usize + 1]
    }

    pub fn from_labels(labels: [usize; 3]) -> Option<Triple> {
        if labels.contains(&0) {
            return None;
        }
        Triple::new(labels[0] - 1, labels[1] - 1, labels[2] - 1)
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.labels();
        write!(f, "({a},{b},{c})")
    }
}

impl Serialize for Triple {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.labels().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Triple {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let labels = <[usize; 3]>::deserialize(d)?;
        Triple::from_labels(labels)
            .ok_or_else(|| serde::de::Error::custom(format!("invalid triple {labels:?}")))
    }
}

/// A 4-set `a < b < c < d` of 0-based indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Packet(pub [u8; 4]);

impl Packet {
    /// The packet's triples in packet order `abc, abd, acd, bcd`.
    pub fn triples(self) -> [Triple; 4] {
        let [a, b, c, d] = self.0;
        [
            Triple { i: a, j: b, k: c },
            Triple { i: a, j: b, k: d },
            Triple { i: a, j: c, k: d },
            Triple { i: b, j: c, k: d },
        ]
    }

    pub fn labels(self) -> [usize; 4] {
        self.0.map(|x| x as usize + 1)
    }
}

impl fmt::Display for Packet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.labels();
        write!(f, "{{{a},{b},{c},{d}}}")
    }
}

/// True iff the four signs change at most once along the sequence.
pub fn packet_is_monotone(signs: [bool; 4]) -> bool {
    signs.windows(2).filter(|w| w[0] != w[1]).count() <= 1
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r = 1usize;
    for t in 0..k {
        r = r * (n - t) / (t + 1);
    }
    r
}

/// Lexicographic rank of a triple among all triples of `[n]`.
pub fn triple_rank(n: usize, t: Triple) -> usize {
    let [i, j, k] = t.lines();
    let mut r = 0;
    for a in 0..i {
        r += binomial(n - 1 - a, 2);
    }
    for b in (i + 1)..j {
        r += n - 1 - b;
    }
    r + (k - j - 1)
}

/// All triples of `[n]` in lexicographic order.
pub fn all_triples(n: usize) -> Vec<Triple> {
    let mut out = Vec::with_capacity(binomial(n, 3));
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                out.push(Triple { i: i as u8, j: j as u8, k: k as u8 });
            }
        }
    }
    out
}

/// All 4-sets of `[n]` in lexicographic order.
pub fn all_packets(n: usize) -> Vec<Packet> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in (a + 1)..n {
            for c in (b + 1)..n {
                for d in (c + 1)..n {
                    out.push(Packet([a as u8, b as u8, c as u8, d as u8]));
                }
            }
        }
    }
    out
}

/// Largest supported element count.
pub const MAX_LINES: usize = 64;

/// A valid 3-signotope. Bit `r` of the sign vector is the sign of the triple
/// with lexicographic rank `r`; a set bit means `+`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signotope {
    n: usize,
    bits: Vec<u64>,
}

impl Signotope {
    fn blank(n: usize) -> Signotope {
        let len = binomial(n, 3);
        Signotope { n, bits: vec![0; len.div_ceil(64)] }
    }

    fn check_n(n: usize) -> Result<()> {
        if !(3..=MAX_LINES).contains(&n) {
            return Err(Error::Malformed(format!(
                "element count must lie in 3..={MAX_LINES}, got {n}"
            )));
        }
        Ok(())
    }

    pub fn all_plus(n: usize) -> Result<Signotope> {
        Signotope::constant(n, Sign::Plus)
    }

    pub fn all_minus(n: usize) -> Result<Signotope> {
        Signotope::constant(n, Sign::Minus)
    }

    pub fn constant(n: usize, sign: Sign) -> Result<Signotope> {
        Signotope::check_n(n)?;
        let mut s = Signotope::blank(n);
        if sign.is_plus() {
            for r in 0..binomial(n, 3) {
                s.set_bit(r, true);
            }
        }
        Ok(s)
    }

    /// Builds a signotope from signs listed in lexicographic triple order.
    pub fn from_signs(n: usize, signs: &[Sign]) -> Result<Signotope> {
        Signotope::check_n(n)?;
        let len = binomial(n, 3);
        if signs.len() != len {
            return Err(Error::Malformed(format!(
                "expected {len} signs for n={n}, got {}",
                signs.len()
            )));
        }
        let mut s = Signotope::blank(n);
        for (r, sign) in signs.iter().enumerate() {
            s.set_bit(r, sign.is_plus());
        }
        s.check_packets()?;
        Ok(s)
    }

    /// Parses a string of `+`/`-` in lexicographic triple order.
    pub fn from_sign_string(n: usize, text: &str) -> Result<Signotope> {
        let signs = text
            .chars()
            .map(|c| match c {
                '+' => Ok(Sign::Plus),
                '-' => Ok(Sign::Minus),
                other => Err(Error::Malformed(format!("unexpected sign character {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Signotope::from_signs(n, &signs)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn triple_count(&self) -> usize {
        binomial(self.n, 3)
    }

    fn bit(&self, r: usize) -> bool {
        (self.bits[r / 64] >> (r % 64)) & 1 == 1
    }

    fn set_bit(&mut self, r: usize, v: bool) {
        if v {
            self.bits[r / 64] |= 1 << (r % 64);
        } else {
            self.bits[r / 64] &= !(1 << (r % 64));
        }
    }

    pub fn sign(&self, t: Triple) -> Sign {
        Sign::from_plus(self.bit(triple_rank(self.n, t)))
    }

    /// Sign of the triple formed by three distinct lines given in any order.
    pub fn sign_of(&self, a: usize, b: usize, c: usize) -> Sign {
        self.sign(Triple::new(a, b, c).expect("distinct lines"))
    }

    pub fn signs(&self) -> Vec<Sign> {
        (0..self.triple_count()).map(|r| Sign::from_plus(self.bit(r))).collect()
    }

    pub fn sign_string(&self) -> String {
        self.signs().into_iter().map(Sign::symbol).collect()
    }

    fn packet_signs(&self, p: Packet) -> [bool; 4] {
        p.triples().map(|t| self.sign(t).is_plus())
    }

    fn check_packets(&self) -> Result<()> {
        for p in all_packets(self.n) {
            if !packet_is_monotone(self.packet_signs(p)) {
                return Err(Error::NotMonotone { packet: p.to_string() });
            }
        }
        Ok(())
    }

    /// The packets containing `t`, each with the position of `t` in it.
    fn packets_of(&self, t: Triple) -> impl Iterator<Item = (Packet, usize)> + '_ {
        let [a, b, c] = t.lines();
        (0..self.n).filter(move |&l| !t.contains(l)).map(move |l| {
            let mut q = [a, b, c, l];
            q.sort_unstable();
            let pos = 3 - q.iter().position(|&x| x == l).unwrap();
            (Packet(q.map(|x| x as u8)), pos)
        })
    }

    /// The first packet that becomes non-monotone when `t` is flipped.
    fn flip_violation(&self, t: Triple) -> Option<Packet> {
        for (p, pos) in self.packets_of(t) {
            let mut s = self.packet_signs(p);
            s[pos] = !s[pos];
            if !packet_is_monotone(s) {
                return Some(p);
            }
        }
        None
    }

    pub fn is_flippable(&self, t: Triple) -> bool {
        self.flip_violation(t).is_none()
    }

    /// Triples whose sign can be changed, in lexicographic order.
    pub fn flippable_triples(&self) -> Vec<Triple> {
        all_triples(self.n).into_iter().filter(|&t| self.is_flippable(t)).collect()
    }

    pub fn flip(&self, t: Triple) -> Result<Signotope> {
        if t.k as usize >= self.n {
            return Err(Error::Malformed(format!("triple {t} out of range for n={}", self.n)));
        }
        if let Some(p) = self.flip_violation(t) {
            return Err(Error::NotFlippable { triple: t.to_string(), packet: p.to_string() });
        }
        let mut s = self.clone();
        let r = triple_rank(self.n, t);
        s.set_bit(r, !self.bit(r));
        Ok(s)
    }

    pub fn neighbors(&self) -> Vec<Signotope> {
        self.flippable_triples().into_iter().map(|t| self.flip(t).unwrap()).collect()
    }

    /// Triples on which the two signotopes differ.
    pub fn differing_triples(&self, other: &Signotope) -> Vec<Triple> {
        all_triples(self.n).into_iter().filter(|&t| self.sign(t) != other.sign(t)).collect()
    }

    pub fn hamming_distance(&self, other: &Signotope) -> usize {
        self.bits.iter().zip(&other.bits).map(|(a, b)| (a ^ b).count_ones() as usize).sum()
    }

    /// Byte encoding: `n` followed by the little-endian sign words.
    pub fn encode(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(1 + 8 * self.bits.len());
        out.push(self.n as u8);
        for w in &self.bits {
            out.extend_from_slice(&w.to_le_bytes());
        }
        out
    }

    /// A signotope restricted to a subset of its lines, relabeled in order.
    pub fn restrict(&self, lines: &[usize]) -> Result<Signotope> {
        let mut sorted = lines.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        Signotope::check_n(sorted.len())?;
        let m = sorted.len();
        let mut s = Signotope::blank(m);
        for t in all_triples(m) {
            let [a, b, c] = t.lines();
            let v = self.sign_of(sorted[a], sorted[b], sorted[c]).is_plus();
            s.set_bit(triple_rank(m, t), v);
        }
        Ok(s)
    }
}

impl fmt::Display for Signotope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.sign_string())
    }
}

/// Checks a candidate sign map given as explicit `(triple, sign)` entries.
///
/// Missing, repeated, or out-of-range triples are reported as malformed input;
/// a complete map that fails a packet reports the first violating packet.
pub fn validate_signotope(
    n: usize,
    entries: impl IntoIterator<Item = (Triple, Sign)>,
) -> Result<Signotope> {
    Signotope::check_n(n)?;
    let len = binomial(n, 3);
    let mut slots: Vec<Option<Sign>> = vec![None; len];
    for (t, sign) in entries {
        if t.k as usize >= n {
            return Err(Error::Malformed(format!("triple {t} out of range for n={n}")));
        }
        let r = triple_rank(n, t);
        if slots[r].replace(sign).is_some() {
            return Err(Error::Malformed(format!("triple {t} assigned twice")));
        }
    }
    let mut signs = Vec::with_capacity(len);
    for (t, slot) in all_triples(n).into_iter().zip(slots) {
        match slot {
            Some(s) => signs.push(s),
            None => return Err(Error::Malformed(format!("triple {t} has no sign"))),
        }
    }
    Signotope::from_signs(n, &signs)
}

/// A wiring diagram. Positions are 0-based internally (position `p` swaps
/// rows `p` and `p + 1`, counted from the top) and 1-based in JSON.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WiringDiagram {
    n: usize,
    word: Vec<usize>,
}

impl WiringDiagram {
    /// Validates a word of 0-based positions.
    pub fn new(n: usize, word: Vec<usize>) -> Result<WiringDiagram> {
        if n < 2 {
            return Err(Error::Malformed(format!("wiring diagram needs n >= 2, got {n}")));
        }
        let mut order: Vec<usize> = (0..n).collect();
        let mut crossed = vec![false; n * n];
        for (step, &p) in word.iter().enumerate() {
            if p + 1 >= n {
                return Err(Error::InvalidWord(format!("step {step}: position {} out of range", p + 1)));
            }
            let (a, b) = (order[p], order[p + 1]);
            if a > b || crossed[a * n + b] {
                return Err(Error::InvalidWord(format!(
                    "step {step}: wires {} and {} already swapped",
                    a.min(b) + 1,
                    a.max(b) + 1
                )));
            }
            crossed[a * n + b] = true;
            order.swap(p, p + 1);
        }
        if word.len() != binomial(n, 2) {
            return Err(Error::InvalidWord(format!(
                "expected {} swaps, got {}",
                binomial(n, 2),
                word.len()
            )));
        }
        Ok(WiringDiagram { n, word })
    }

    /// Validates a word of 1-based positions.
    pub fn from_one_based(n: usize, word: &[usize]) -> Result<WiringDiagram> {
        if word.contains(&0) {
            return Err(Error::InvalidWord("positions are 1-based".into()));
        }
        WiringDiagram::new(n, word.iter().map(|p| p - 1).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn one_based_word(&self) -> Vec<usize> {
        self.word.iter().map(|p| p + 1).collect()
    }

    /// The swapped wire pairs `(upper, lower)` before each step, in order.
    pub fn swaps(&self) -> Vec<(usize, usize)> {
        let mut order: Vec<usize> = (0..self.n).collect();
        self.word
            .iter()
            .map(|&p| {
                let pair = (order[p], order[p + 1]);
                order.swap(p, p + 1);
                pair
            })
            .collect()
    }
}

/// Reads triple orientations off a wiring diagram: `σ(ijk) = +` iff wire `j`
/// is below the swap of `i` and `k`.
pub fn wiring_to_signotope(w: &WiringDiagram) -> Result<Signotope> {
    let n = w.n;
    Signotope::check_n(n)?;
    let mut s = Signotope::blank(n);
    let mut order: Vec<usize> = (0..n).collect();
    let mut row: Vec<usize> = (0..n).collect();
    for &p in &w.word {
        let (a, b) = (order[p], order[p + 1]);
        for c in (a + 1)..b {
            if row[c] > p + 1 {
                s.set_bit(triple_rank(n, Triple::new(a, c, b).unwrap()), true);
            }
        }
        order.swap(p, p + 1);
        row[a] = p + 1;
        row[b] = p;
    }
    s.check_packets()?;
    Ok(s)
}

/// Builds a wiring diagram with the given triple orientations. Always takes
/// the topmost admissible swap, so the word is deterministic.
pub fn signotope_to_wiring(s: &Signotope) -> WiringDiagram {
    let n = s.n;
    let mut order: Vec<usize> = (0..n).collect();
    let mut row: Vec<usize> = (0..n).collect();
    let mut word = Vec::with_capacity(binomial(n, 2));
    let crossed = |row: &[usize], x: usize, y: usize| row[x] > row[y];
    for _ in 0..binomial(n, 2) {
        let p = (0..n - 1)
            .find(|&p| {
                let (a, b) = (order[p], order[p + 1]);
                a < b && swap_admissible(s, &row, a, b, crossed)
            })
            .expect("a valid signotope always admits a swap");
        let (a, b) = (order[p], order[p + 1]);
        order.swap(p, p + 1);
        row[a] = p + 1;
        row[b] = p;
        word.push(p);
    }
    WiringDiagram { n, word }
}

/// Whether wires `a < b` may cross now: in every triple containing them, the
/// pairs that must cross before `ab` have crossed and the later ones have not.
fn swap_admissible(
    s: &Signotope,
    row: &[usize],
    a: usize,
    b: usize,
    crossed: impl Fn(&[usize], usize, usize) -> bool,
) -> bool {
    (0..s.n).filter(|&c| c != a && c != b).all(|c| {
        let t = Triple::new(a, b, c).unwrap();
        let [x, y, z] = t.lines();
        let seq = if s.sign(t).is_plus() {
            [(y, z), (x, z), (x, y)]
        } else {
            [(x, y), (x, z), (y, z)]
        };
        let me = seq.iter().position(|&(u, v)| (u, v) == (a, b)).unwrap();
        seq.iter()
            .enumerate()
            .filter(|&(idx, _)| idx != me)
            .all(|(idx, &(u, v))| crossed(row, u, v) == (idx < me))
    })
}

/// A lazy random walk on the signotope flip graph from a fixed start.
pub fn random_signotope<R: Rng + ?Sized>(start: &Signotope, steps: usize, rng: &mut R) -> Signotope {
    let mut s = start.clone();
    for _ in 0..steps {
        if rng.gen_bool(0.5) {
            continue;
        }
        let f = s.flippable_triples();
        let t = f[rng.gen_range(0..f.len())];
        s = s.flip(t).unwrap();
    }
    s
}

#[derive(Serialize, Deserialize)]
struct SignotopeJson {
    n: usize,
    signs: String,
}

#[derive(Serialize, Deserialize)]
struct WiringJson {
    n: usize,
    word: Vec<usize>,
}

impl Serialize for Signotope {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SignotopeJson { n: self.n, signs: self.sign_string() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Signotope {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = SignotopeJson::deserialize(d)?;
        Signotope::from_sign_string(raw.n, &raw.signs).map_err(serde::de::Error::custom)
    }
}

impl Serialize for WiringDiagram {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        WiringJson { n: self.n, word: self.one_based_word() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for WiringDiagram {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = WiringJson::deserialize(d)?;
        WiringDiagram::from_one_based(raw.n, &raw.word).map_err(serde::de::Error::custom)
    }
}
