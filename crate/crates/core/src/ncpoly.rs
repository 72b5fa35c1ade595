//! Noncommutative polynomials in two letters with exact rational
//! coefficients: `ℚ⟨a,b⟩` and `ℚ⟨c,d⟩`.
//!
//! Words are stored as letter indices (`0` for `a`/`c`, `1` for `b`/`d`).
//! Terms print by degree, then lexicographically with `c < d` and `a < b`,
//! so `c^3 + 2*c*d + 2*d*c`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Alphabet {
    AB,
    CD,
}

impl Alphabet {
    pub fn letters(self) -> [char; 2] {
        match self {
            Alphabet::AB => ['a', 'b'],
            Alphabet::CD => ['c', 'd'],
        }
    }

    /// `deg(c) = 1`, `deg(d) = 2`; both `a` and `b` have degree 1.
    pub fn letter_degree(self, letter: u8) -> usize {
        match (self, letter) {
            (Alphabet::CD, 1) => 2,
            _ => 1,
        }
    }
}

pub type Word = Vec<u8>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("empty term in `{0}`")]
    EmptyTerm(String),
    #[error("cannot parse factor `{0}`")]
    BadFactor(String),
    #[error("letters from both alphabets in `{0}`")]
    MixedAlphabet(String),
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NCPoly {
    alphabet: Alphabet,
    terms: BTreeMap<Word, BigRational>,
}

impl NCPoly {
    pub fn zero(alphabet: Alphabet) -> Self {
        NCPoly {
            alphabet,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(alphabet: Alphabet) -> Self {
        Self::monomial(alphabet, Vec::new(), BigRational::one())
    }

    pub fn monomial(alphabet: Alphabet, word: Word, coeff: BigRational) -> Self {
        let mut p = Self::zero(alphabet);
        p.add_term(word, coeff);
        p
    }

    /// A single letter, `0` or `1`.
    pub fn letter(alphabet: Alphabet, letter: u8) -> Self {
        Self::monomial(alphabet, vec![letter], BigRational::one())
    }

    pub fn a() -> Self {
        Self::letter(Alphabet::AB, 0)
    }
    pub fn b() -> Self {
        Self::letter(Alphabet::AB, 1)
    }
    pub fn c() -> Self {
        Self::letter(Alphabet::CD, 0)
    }
    pub fn d() -> Self {
        Self::letter(Alphabet::CD, 1)
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &BigRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn add_term(&mut self, word: Word, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(word) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Coefficient of the word written with this polynomial's letters, e.g.
    /// `"cd"`.
    pub fn coeff(&self, word: &str) -> BigRational {
        let [l0, l1] = self.alphabet.letters();
        let w: Option<Word> = word
            .chars()
            .map(|ch| match ch {
                c if c == l0 => Some(0),
                c if c == l1 => Some(1),
                _ => None,
            })
            .collect();
        w.and_then(|w| self.terms.get(&w).cloned()).unwrap_or_else(BigRational::zero)
    }

    pub fn word_degree(&self, w: &[u8]) -> usize {
        w.iter().map(|&l| self.alphabet.letter_degree(l)).sum()
    }

    /// Degree of the highest term; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|w| self.word_degree(w)).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|w| self.word_degree(w));
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn scale(&self, k: &BigRational) -> NCPoly {
        let mut out = NCPoly::zero(self.alphabet);
        for (w, v) in &self.terms {
            out.add_term(w.clone(), v * k);
        }
        out
    }

    pub fn scale_int(&self, k: i64) -> NCPoly {
        self.scale(&BigRational::from_integer(BigInt::from(k)))
    }

    pub fn half(&self) -> NCPoly {
        self.scale(&BigRational::new(BigInt::from(1), BigInt::from(2)))
    }

    /// Every word reversed.
    pub fn reverse(&self) -> NCPoly {
        let mut out = NCPoly::zero(self.alphabet);
        for (w, v) in &self.terms {
            let mut r = w.clone();
            r.reverse();
            out.add_term(r, v.clone());
        }
        out
    }

    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.values().all(|v| v.is_integer())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|v| !v.is_negative())
    }

    /// Applies a linear map defined on words.
    pub fn map_words(&self, alphabet: Alphabet, f: impl Fn(&[u8]) -> NCPoly) -> NCPoly {
        let mut out = NCPoly::zero(alphabet);
        for (w, v) in &self.terms {
            let image = f(w);
            for (w2, v2) in &image.terms {
                out.add_term(w2.clone(), v * v2);
            }
        }
        out
    }

    /// Substitutes a polynomial for each letter.
    pub fn substitute(&self, images: [&NCPoly; 2]) -> NCPoly {
        let alphabet = images[0].alphabet;
        self.map_words(alphabet, |w| {
            w.iter()
                .fold(NCPoly::one(alphabet), |acc, &l| &acc * images[l as usize])
        })
    }

    /// The derivation with the given letter images, extended by the Leibniz
    /// rule.
    pub fn derive(&self, images: [&NCPoly; 2]) -> NCPoly {
        let alphabet = self.alphabet;
        self.map_words(alphabet, |w| {
            let mut out = NCPoly::zero(alphabet);
            for i in 0..w.len() {
                let left = NCPoly::monomial(alphabet, w[..i].to_vec(), BigRational::one());
                let right = NCPoly::monomial(alphabet, w[i + 1..].to_vec(), BigRational::one());
                out = &out + &(&(&left * images[w[i] as usize]) * &right);
            }
            out
        })
    }

    /// Parses the printed form, e.g. `c^4 + 3*c^2*d - 1/2*d*c`. The alphabet
    /// is inferred from the letters; constants default to `{c,d}`.
    pub fn parse(s: &str) -> Result<NCPoly, ParseError> {
        let uses_ab = s.contains('a') || s.contains('b');
        let uses_cd = s.contains('c') || s.contains('d');
        if uses_ab && uses_cd {
            return Err(ParseError::MixedAlphabet(s.to_string()));
        }
        let alphabet = if uses_ab { Alphabet::AB } else { Alphabet::CD };
        Self::parse_in(s, alphabet)
    }

    pub fn parse_in(s: &str, alphabet: Alphabet) -> Result<NCPoly, ParseError> {
        let [l0, l1] = alphabet.letters();
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut out = NCPoly::zero(alphabet);
        // Split into signed terms at + and - that are not inside a fraction.
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut current = String::new();
        let mut negative = false;
        for ch in compact.chars() {
            if (ch == '+' || ch == '-') && !current.is_empty() {
                terms.push((negative, std::mem::take(&mut current)));
                negative = ch == '-';
            } else if (ch == '+' || ch == '-') && current.is_empty() {
                negative ^= ch == '-';
            } else {
                current.push(ch);
            }
        }
        if current.is_empty() {
            if terms.is_empty() || negative {
                return Err(ParseError::EmptyTerm(s.to_string()));
            }
        } else {
            terms.push((negative, current));
        }
        for (neg, term) in terms {
            let mut coeff = BigRational::one();
            let mut word = Word::new();
            for factor in term.split('*') {
                if factor.is_empty() {
                    return Err(ParseError::EmptyTerm(s.to_string()));
                }
                let (base, power) = match factor.split_once('^') {
                    Some((b, p)) => (b, p.parse::<usize>().map_err(|_| ParseError::BadFactor(factor.into()))?),
                    None => (factor, 1),
                };
                let letter = match base {
                    b if b.len() == 1 && b.starts_with(l0) => Some(0u8),
                    b if b.len() == 1 && b.starts_with(l1) => Some(1u8),
                    _ => None,
                };
                match letter {
                    Some(l) => word.extend(std::iter::repeat(l).take(power)),
                    None => {
                        let v = parse_rational(base).ok_or_else(|| ParseError::BadFactor(factor.into()))?;
                        for _ in 0..power {
                            coeff *= &v;
                        }
                    }
                }
            }
            if neg {
                coeff = -coeff;
            }
            out.add_term(word, coeff);
        }
        Ok(out)
    }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    match s.split_once('/') {
        Some((n, d)) => {
            let d: BigInt = d.parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n.parse().ok()?, d))
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}

impl FromStr for NCPoly {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        NCPoly::parse(s)
    }
}

fn write_word(f: &mut fmt::Formatter<'_>, w: &[u8], letters: [char; 2]) -> fmt::Result {
    let mut first = true;
    let mut i = 0;
    while i < w.len() {
        let mut j = i;
        while j < w.len() && w[j] == w[i] {
            j += 1;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        write!(f, "{}", letters[w[i] as usize])?;
        if j - i > 1 {
            write!(f, "^{}", j - i)?;
        }
        i = j;
    }
    Ok(())
}

impl fmt::Display for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let letters = self.alphabet.letters();
        let mut sorted: Vec<_> = self.terms.iter().collect();
        sorted.sort_by_key(|(w, _)| self.word_degree(w));
        for (k, (w, v)) in sorted.into_iter().enumerate() {
            let mag = v.abs();
            if k == 0 {
                if v.is_negative() {
                    write!(f, "-")?;
                }
            } else if v.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if w.is_empty() {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                write_word(f, w, letters)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NCPoly({self})")
    }
}

impl Add for &NCPoly {
    type Output = NCPoly;
    fn add(self, rhs: &NCPoly) -> NCPoly {
        let alphabet = if self.is_zero() { rhs.alphabet } else { self.alphabet };
        let mut out = NCPoly {
            alphabet,
            terms: self.terms.clone(),
        };
        for (w, v) in &rhs.terms {
            out.add_term(w.clone(), v.clone());
        }
        out
    }
}

impl Sub for &NCPoly {
    type Output = NCPoly;
    fn sub(self, rhs: &NCPoly) -> NCPoly {
        self + &(-rhs)
    }
}

impl Neg for &NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        NCPoly {
            alphabet: self.alphabet,
            terms: self.terms.iter().map(|(w, v)| (w.clone(), -v.clone())).collect(),
        }
    }
}

impl Mul for &NCPoly {
    type Output = NCPoly;
    fn mul(self, rhs: &NCPoly) -> NCPoly {
        let alphabet = if self.terms.keys().all(|w| w.is_empty()) { rhs.alphabet } else { self.alphabet };
        let mut out = NCPoly::zero(alphabet);
        for (w1, v1) in &self.terms {
            for (w2, v2) in &rhs.terms {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                out.add_term(w, v1 * v2);
            }
        }
        out
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for NCPoly {
            type Output = NCPoly;
            fn $m(self, rhs: NCPoly) -> NCPoly { (&self).$m(&rhs) }
        }
        impl $tr<&NCPoly> for NCPoly {
            type Output = NCPoly;
            fn $m(self, rhs: &NCPoly) -> NCPoly { (&self).$m(rhs) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        -&self
    }
}

/// `G(c) = d`, `G(d) = cd`.
pub fn derivation_g(p: &NCPoly) -> NCPoly {
    p.derive([&NCPoly::d(), &(NCPoly::c() * NCPoly::d())])
}

/// `G'(c) = d`, `G'(d) = dc`.
pub fn derivation_gprime(p: &NCPoly) -> NCPoly {
    p.derive([&NCPoly::d(), &(NCPoly::d() * NCPoly::c())])
}

/// `D = G + G'`.
pub fn derivation_d(p: &NCPoly) -> NCPoly {
    derivation_g(p) + derivation_gprime(p)
}

/// `c ↦ a + b`, `d ↦ ab + ba`.
pub fn expand_cd(p: &NCPoly) -> NCPoly {
    let (a, b) = (NCPoly::a(), NCPoly::b());
    let c = &a + &b;
    let d = &(&a * &b) + &(&b * &a);
    p.substitute([&c, &d])
}

/// All `cd`-words of the given degree, in lexicographic order.
pub fn cd_words(degree: usize) -> Vec<Word> {
    match degree {
        0 => vec![vec![]],
        1 => vec![vec![0]],
        _ => {
            let mut out: Vec<Word> = cd_words(degree - 1)
                .into_iter()
                .map(|mut w| {
                    w.insert(0, 0);
                    w
                })
                .collect();
            out.extend(cd_words(degree - 2).into_iter().map(|mut w| {
                w.insert(0, 1);
                w
            }));
            out
        }
    }
}
