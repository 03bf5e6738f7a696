use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::{compare_words, AlgError, Alphabet, Letter, MonomialOrder, Word};
use crate::exactnum::{Rational, Scalar};

/// Whether a generator substitution extends multiplicatively in the same
/// or in reversed order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Homomorphism,
    Antihomomorphism,
}

/// Element of the free algebra over `alphabet`. Zero coefficients are never
/// stored.
#[derive(Clone, PartialEq)]
pub struct NCPoly<C: Scalar = Rational> {
    alphabet: Arc<Alphabet>,
    terms: BTreeMap<Word, C>,
}

impl<C: Scalar> NCPoly<C> {
    pub fn zero(alphabet: &Arc<Alphabet>) -> Self {
        NCPoly { alphabet: alphabet.clone(), terms: BTreeMap::new() }
    }

    pub fn one(alphabet: &Arc<Alphabet>) -> Self {
        Self::constant(alphabet, C::one())
    }

    pub fn constant(alphabet: &Arc<Alphabet>, c: C) -> Self {
        Self::monomial(alphabet, Word::empty(), c)
    }

    pub fn monomial(alphabet: &Arc<Alphabet>, word: Word, c: C) -> Self {
        let mut p = Self::zero(alphabet);
        p.add_term(word, c);
        p
    }

    pub fn generator(alphabet: &Arc<Alphabet>, g: Letter) -> Self {
        Self::monomial(alphabet, Word::letter(g), C::one())
    }

    /// The generator with the given name.
    pub fn var(alphabet: &Arc<Alphabet>, name: &str) -> Result<Self, AlgError> {
        Ok(Self::generator(alphabet, alphabet.letter(name)?))
    }

    pub fn from_terms(alphabet: &Arc<Alphabet>, terms: impl IntoIterator<Item = (Word, C)>) -> Self {
        let mut p = Self::zero(alphabet);
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &C)> {
        self.terms.iter()
    }

    pub(crate) fn into_terms(self) -> BTreeMap<Word, C> {
        self.terms
    }

    pub(crate) fn from_map(alphabet: Arc<Alphabet>, terms: BTreeMap<Word, C>) -> Self {
        debug_assert!(terms.values().all(|c| !c.is_zero()));
        NCPoly { alphabet, terms }
    }

    pub fn coefficient(&self, w: &Word) -> C {
        self.terms.get(w).cloned().unwrap_or_else(C::zero)
    }

    /// Highest word length, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next_back().map(Word::len)
    }

    /// The constant coefficient if every term is the empty word.
    pub fn as_constant(&self) -> Option<C> {
        match self.terms.len() {
            0 => Some(C::zero()),
            1 => self.terms.get(&Word::empty()).cloned(),
            _ => None,
        }
    }

    pub fn leading_term(&self, order: MonomialOrder) -> Option<(&Word, &C)> {
        match order {
            MonomialOrder::DegLex => self.terms.iter().next_back(),
            _ => self.terms.iter().max_by(|a, b| compare_words(a.0, b.0, order)),
        }
    }

    pub fn add_term(&mut self, w: Word, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    fn check_same(&self, other: &Self) -> Result<(), AlgError> {
        if Alphabet::same(&self.alphabet, &other.alphabet) {
            Ok(())
        } else {
            Err(AlgError::AlphabetMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, AlgError> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, AlgError> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.neg());
        }
        Ok(out)
    }

    /// Concatenation product, extended bilinearly.
    pub fn try_mul(&self, other: &Self) -> Result<Self, AlgError> {
        self.check_same(other)?;
        let mut out = Self::zero(&self.alphabet);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.concat(b), ca.mul(cb));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(&self.alphabet);
        }
        let terms = self.terms.iter().map(|(w, x)| (w.clone(), x.mul(c))).collect();
        NCPoly { alphabet: self.alphabet.clone(), terms }
    }

    /// `left · self · right` for words.
    pub fn sandwich(&self, left: &[Letter], right: &[Letter]) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(w, c)| {
                let mut v = Vec::with_capacity(left.len() + w.len() + right.len());
                v.extend_from_slice(left);
                v.extend_from_slice(w.letters());
                v.extend_from_slice(right);
                (Word::from(v), c.clone())
            })
            .collect();
        NCPoly { alphabet: self.alphabet.clone(), terms }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one(&self.alphabet);
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Applies the (anti)homomorphism determined by `images[g]` for each
    /// generator `g`. All images must share one target alphabet.
    pub fn substitute(&self, images: &[NCPoly<C>], direction: Direction) -> Result<Self, AlgError> {
        substitute_into(self, images, direction, None)
    }

    /// As [`substitute`](Self::substitute), with an explicit target alphabet
    /// (needed when the source has no generators to take it from).
    pub fn substitute_to(
        &self,
        target: &Arc<Alphabet>,
        images: &[NCPoly<C>],
        direction: Direction,
    ) -> Result<Self, AlgError> {
        substitute_into(self, images, direction, Some(target))
    }

    /// Renames the polynomial onto another alphabet with the same letters
    /// (e.g. a fresh `Arc` built from the same names).
    pub fn with_alphabet(&self, alphabet: &Arc<Alphabet>) -> Result<Self, AlgError> {
        if alphabet.len() != self.alphabet.len() {
            return Err(AlgError::AlphabetMismatch);
        }
        Ok(NCPoly { alphabet: alphabet.clone(), terms: self.terms.clone() })
    }
}

fn substitute_into<C: Scalar>(
    p: &NCPoly<C>,
    images: &[NCPoly<C>],
    direction: Direction,
    target: Option<&Arc<Alphabet>>,
) -> Result<NCPoly<C>, AlgError> {
    if images.len() < p.alphabet.len() {
        let missing = p.alphabet.name(images.len() as Letter);
        return Err(AlgError::MissingImage(missing.to_string()));
    }
    let target = match (target, images.first()) {
        (Some(t), _) => t.clone(),
        (None, Some(img)) => img.alphabet.clone(),
        (None, None) => Alphabet::empty(),
    };
    if images.iter().any(|img| !Alphabet::same(&img.alphabet, &target)) {
        return Err(AlgError::AlphabetMismatch);
    }
    let mut out = NCPoly::zero(&target);
    for (w, c) in &p.terms {
        let mut acc = NCPoly::constant(&target, c.clone());
        let letters: Box<dyn Iterator<Item = &Letter>> = match direction {
            Direction::Homomorphism => Box::new(w.letters().iter()),
            Direction::Antihomomorphism => Box::new(w.letters().iter().rev()),
        };
        for &g in letters {
            acc = acc.try_mul(&images[g as usize])?;
            if acc.is_zero() {
                break;
            }
        }
        for (tw, tc) in acc.terms {
            out.add_term(tw, tc);
        }
    }
    Ok(out)
}

impl<C: Scalar> fmt::Display for NCPoly<C> {
    /// Terms in decreasing deglex order, each as `coefficient*g1.g2…`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().rev().enumerate() {
            let text = c.to_string();
            let (neg, abs) = match text.strip_prefix('-') {
                Some(rest) if !text.contains(' ') => (true, rest.to_string()),
                _ => (false, text),
            };
            let abs = if abs.contains(' ') { format!("({abs})") } else { abs };
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            write!(f, "{abs}")?;
            if !w.is_empty() {
                write!(f, "*")?;
                for (k, &g) in w.letters().iter().enumerate() {
                    if k > 0 {
                        write!(f, ".")?;
                    }
                    write!(f, "{}", self.alphabet.name(g))?;
                }
            }
        }
        Ok(())
    }
}

impl<C: Scalar> fmt::Debug for NCPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NCPoly({self})")
    }
}

impl<C: Scalar> Add for &NCPoly<C> {
    type Output = NCPoly<C>;
    fn add(self, rhs: Self) -> NCPoly<C> {
        self.try_add(rhs).expect("alphabet mismatch in polynomial addition")
    }
}

impl<C: Scalar> Sub for &NCPoly<C> {
    type Output = NCPoly<C>;
    fn sub(self, rhs: Self) -> NCPoly<C> {
        self.try_sub(rhs).expect("alphabet mismatch in polynomial subtraction")
    }
}

impl<C: Scalar> Mul for &NCPoly<C> {
    type Output = NCPoly<C>;
    fn mul(self, rhs: Self) -> NCPoly<C> {
        self.try_mul(rhs).expect("alphabet mismatch in polynomial multiplication")
    }
}

impl<C: Scalar> Neg for &NCPoly<C> {
    type Output = NCPoly<C>;
    fn neg(self) -> NCPoly<C> {
        self.scale(&C::one().neg())
    }
}

impl<C: Scalar> Add for NCPoly<C> {
    type Output = NCPoly<C>;
    fn add(self, rhs: Self) -> NCPoly<C> {
        &self + &rhs
    }
}

impl<C: Scalar> Sub for NCPoly<C> {
    type Output = NCPoly<C>;
    fn sub(self, rhs: Self) -> NCPoly<C> {
        &self - &rhs
    }
}

impl<C: Scalar> Mul for NCPoly<C> {
    type Output = NCPoly<C>;
    fn mul(self, rhs: Self) -> NCPoly<C> {
        &self * &rhs
    }
}

impl<C: Scalar> Neg for NCPoly<C> {
    type Output = NCPoly<C>;
    fn neg(self) -> NCPoly<C> {
        -&self
    }
}
