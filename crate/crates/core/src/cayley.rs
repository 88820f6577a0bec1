//! The quantum K-theory ring of the Cayley plane `E6/P6`.
//!
//! The multiplication table is data: 351 products of non-unit Schubert
//! classes, one per line, in the grammar
//!
//! ```text
//! line  := label "*" label "=" expr          ('#' starts a comment)
//! label := "O" INT ("'" | "''")?
//! expr  := term ((" + " | " - ") term)*
//! term  := [INT] [q | q^INT] [label]          (missing label = unit class)
//! ```
//!
//! Fidelity of the data is checked globally: associativity on all triples,
//! the degree bound, and a codimension/sign rule.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::curve::CominSpace;
use crate::error::{Error, Result};
use crate::report::CheckResult;
use crate::weyl::{format_word, ParabolicQuotient};

/// The table as shipped with the crate.
pub const SHIPPED_TABLE: &str = include_str!("../data/qk_e6p6.tbl");

pub const DIMENSION: u8 = 16;
pub const NUM_CLASSES: usize = 27;
pub const NUM_PRODUCTS: usize = 351;

/// Weyl words for the classes of codimension 4 through 12.
pub const LABEL_WORDS: [(&str, &[usize]); 19] = [
    ("O4", &[5, 4, 3, 1, 6, 5, 4, 2, 3, 4, 5, 6]),
    ("O4'", &[2, 4, 3, 1, 6, 5, 4, 2, 3, 4, 5, 6]),
    ("O5", &[2, 4, 3, 1, 5, 4, 2, 3, 4, 5, 6]),
    ("O5'", &[4, 3, 1, 6, 5, 4, 2, 3, 4, 5, 6]),
    ("O6", &[4, 3, 1, 5, 4, 2, 3, 4, 5, 6]),
    ("O6'", &[3, 1, 6, 5, 4, 2, 3, 4, 5, 6]),
    ("O7", &[3, 1, 5, 4, 2, 3, 4, 5, 6]),
    ("O7'", &[1, 6, 5, 4, 2, 3, 4, 5, 6]),
    ("O8", &[3, 1, 4, 2, 3, 4, 5, 6]),
    ("O8'", &[1, 5, 4, 2, 3, 4, 5, 6]),
    ("O8''", &[6, 5, 4, 2, 3, 4, 5, 6]),
    ("O9", &[1, 4, 2, 3, 4, 5, 6]),
    ("O9'", &[5, 4, 2, 3, 4, 5, 6]),
    ("O10", &[1, 2, 3, 4, 5, 6]),
    ("O10'", &[4, 2, 3, 4, 5, 6]),
    ("O11", &[1, 3, 4, 5, 6]),
    ("O11'", &[2, 3, 4, 5, 6]),
    ("O12", &[2, 4, 5, 6]),
    ("O12'", &[3, 4, 5, 6]),
];

/// Number of classes of each codimension.
fn variants_in(codim: u8) -> u8 {
    match codim {
        8 => 3,
        4..=7 | 9..=12 => 2,
        0..=16 => 1,
        _ => 0,
    }
}

/// A Schubert class `O_c`, `O'_c` or `O''_c`; ordered by codimension then
/// number of primes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClassLabel {
    pub codim: u8,
    pub variant: u8,
}

impl ClassLabel {
    pub const UNIT: ClassLabel = ClassLabel { codim: 0, variant: 0 };

    pub fn new(codim: u8, variant: u8) -> Result<Self> {
        if variant >= variants_in(codim) {
            let primes = "'".repeat(variant as usize);
            return Err(Error::Census(format!("O{codim}{primes}")));
        }
        Ok(ClassLabel { codim, variant })
    }

    /// All 27 classes in order.
    pub fn all() -> Vec<ClassLabel> {
        (0..=DIMENSION)
            .flat_map(|c| (0..variants_in(c)).map(move |v| ClassLabel { codim: c, variant: v }))
            .collect()
    }

    /// Position in [`ClassLabel::all`].
    pub fn index(self) -> usize {
        let before: usize = (0..self.codim).map(|c| variants_in(c) as usize).sum();
        before + self.variant as usize
    }

    pub fn is_unit(self) -> bool {
        self == Self::UNIT
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "O{}{}", self.codim, "'".repeat(self.variant as usize))
    }
}

impl FromStr for ClassLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser::new(s.trim(), 1);
        let label = p.label()?;
        p.end()?;
        Ok(label)
    }
}

/// A `Z[q]`-linear combination of classes with no zero coefficients.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct QKElement {
    terms: BTreeMap<(u32, ClassLabel), i64>,
}

impl QKElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::basis(ClassLabel::UNIT)
    }

    pub fn basis(label: ClassLabel) -> Self {
        Self::monomial(1, 0, label)
    }

    pub fn monomial(coeff: i64, q: u32, label: ClassLabel) -> Self {
        let mut e = Self::zero();
        if coeff != 0 {
            e.terms.insert((q, label), coeff);
        }
        e
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

    /// Terms as `(q_degree, label, coefficient)` in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, ClassLabel, i64)> + '_ {
        self.terms.iter().map(|(&(q, l), &c)| (q, l, c))
    }

    pub fn coefficient(&self, q: u32, label: ClassLabel) -> i64 {
        self.terms.get(&(q, label)).copied().unwrap_or(0)
    }

    pub fn max_q_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(q, _)| q).max()
    }

    pub fn add_term(&mut self, coeff: i64, q: u32, label: ClassLabel) -> Result<()> {
        let slot = self.terms.entry((q, label)).or_insert(0);
        *slot = slot.checked_add(coeff).ok_or(Error::Overflow("ring coefficient"))?;
        if *slot == 0 {
            self.terms.remove(&(q, label));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &QKElement) -> Result<QKElement> {
        let mut out = self.clone();
        for (q, l, c) in other.terms() {
            out.add_term(c, q, l)?;
        }
        Ok(out)
    }

    pub fn checked_scale(&self, k: i64) -> Result<QKElement> {
        let mut out = QKElement::zero();
        for (q, l, c) in self.terms() {
            let c = c.checked_mul(k).ok_or(Error::Overflow("ring coefficient"))?;
            out.add_term(c, q, l)?;
        }
        Ok(out)
    }
}

impl fmt::Display for QKElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (q, label, c)) in self.terms().enumerate() {
            match (i, c < 0) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mut parts = Vec::new();
            if c.unsigned_abs() != 1 {
                parts.push(c.unsigned_abs().to_string());
            }
            match q {
                0 => {}
                1 => parts.push("q".into()),
                _ => parts.push(format!("q^{q}")),
            }
            if !label.is_unit() || q == 0 {
                parts.push(label.to_string());
            }
            f.write_str(&parts.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for QKElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser::new(s.trim(), 1);
        if p.rest() == "0" {
            return Ok(QKElement::zero());
        }
        let e = p.expr()?;
        p.end()?;
        Ok(e)
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    line: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str, line: usize) -> Self {
        Parser { src, pos: 0, line }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn err(&self, message: impl Into<String>) -> Error {
        Error::Syntax {
            line: self.line,
            column: self.src[..self.pos].chars().count() + 1,
            message: message.into(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(format!("expected '{c}'")))
        }
    }

    fn int(&mut self) -> Option<u64> {
        let digits = self.rest().chars().take_while(char::is_ascii_digit).count();
        if digits == 0 {
            return None;
        }
        let v = self.rest()[..digits].parse().ok();
        if v.is_some() {
            self.pos += digits;
        }
        v
    }

    fn label(&mut self) -> Result<ClassLabel> {
        let start = self.pos;
        if !self.eat('O') {
            return Err(self.err("expected class label"));
        }
        let codim = self.int().ok_or_else(|| self.err("expected codimension"))?;
        let mut variant = 0u8;
        while variant < 3 && self.eat('\'') {
            variant += 1;
        }
        let codim = u8::try_from(codim).unwrap_or(u8::MAX);
        ClassLabel::new(codim, variant).map_err(|_| {
            Error::Census(format!("{} at line {}", &self.src[start..self.pos], self.line))
        })
    }

    /// `[INT] [q[^INT]] [label]`, at least one part present.
    fn term(&mut self) -> Result<(i64, u32, ClassLabel)> {
        let mut coeff = None;
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let v = self.int().ok_or_else(|| self.err("coefficient too large"))?;
            coeff = Some(i64::try_from(v).map_err(|_| self.err("coefficient too large"))?);
            self.skip_ws();
        }
        let mut q = None;
        if self.eat('q') {
            let mut k = 1u32;
            if self.eat('^') {
                let v = self.int().ok_or_else(|| self.err("expected exponent"))?;
                k = u32::try_from(v).map_err(|_| self.err("exponent too large"))?;
            }
            q = Some(k);
            self.skip_ws();
        }
        let label = if self.peek() == Some('O') {
            Some(self.label()?)
        } else {
            None
        };
        if q.is_none() && label.is_none() {
            return Err(self.err("expected q-power or class label"));
        }
        Ok((coeff.unwrap_or(1), q.unwrap_or(0), label.unwrap_or(ClassLabel::UNIT)))
    }

    fn expr(&mut self) -> Result<QKElement> {
        let mut out = QKElement::zero();
        self.skip_ws();
        let mut sign = if self.eat('-') { -1 } else { 1 };
        loop {
            self.skip_ws();
            let (c, q, l) = self.term()?;
            out.add_term(sign * c, q, l)?;
            self.skip_ws();
            sign = if self.eat('+') {
                1
            } else if self.eat('-') {
                -1
            } else {
                return Ok(out);
            };
        }
    }

    fn end(&mut self) -> Result<()> {
        self.skip_ws();
        if self.pos == self.src.len() {
            Ok(())
        } else {
            Err(self.err("unexpected trailing input"))
        }
    }
}

/// Products of all unordered pairs of non-unit classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultTable {
    /// Keyed by `(larger, smaller)`.
    entries: BTreeMap<(ClassLabel, ClassLabel), QKElement>,
    /// Operands in the order they were written.
    order: Vec<(ClassLabel, ClassLabel)>,
}

fn key(a: ClassLabel, b: ClassLabel) -> (ClassLabel, ClassLabel) {
    (a.max(b), a.min(b))
}

pub fn parse_table(text: &str) -> Result<MultTable> {
    let mut entries = BTreeMap::new();
    let mut order = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        let mut p = Parser::new(line, i + 1);
        p.skip_ws();
        let a = p.label()?;
        p.expect('*')?;
        p.skip_ws();
        let b = p.label()?;
        if a.is_unit() || b.is_unit() {
            return Err(p.err("unit products are implicit"));
        }
        p.expect('=')?;
        let value = p.expr()?;
        p.end()?;
        if entries.insert(key(a, b), value).is_some() {
            return Err(Error::DuplicatePair(format!("{a} * {b}"), i + 1));
        }
        order.push((a, b));
    }
    if entries.len() != NUM_PRODUCTS {
        return Err(Error::EntryCount {
            expected: NUM_PRODUCTS,
            found: entries.len(),
        });
    }
    Ok(MultTable { entries, order })
}

/// One line per product, in source order, with canonical right-hand sides.
pub fn serialize(t: &MultTable) -> String {
    let mut out = String::new();
    for &(a, b) in &t.order {
        out.push_str(&format!("{a} * {b} = {}\n", t.entries[&key(a, b)]));
    }
    out
}

impl MultTable {
    pub fn shipped() -> Self {
        parse_table(SHIPPED_TABLE).expect("shipped table parses")
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Operand pairs in source order.
    pub fn pairs(&self) -> &[(ClassLabel, ClassLabel)] {
        &self.order
    }

    /// `O_a * O_b`.
    pub fn product(&self, a: ClassLabel, b: ClassLabel) -> QKElement {
        if a.is_unit() {
            return QKElement::basis(b);
        }
        if b.is_unit() {
            return QKElement::basis(a);
        }
        self.entries[&key(a, b)].clone()
    }

    /// Replaces a stored product; used to build corrupted tables.
    pub fn set_product(&mut self, a: ClassLabel, b: ClassLabel, value: QKElement) -> Result<()> {
        match self.entries.get_mut(&key(a, b)) {
            Some(slot) => {
                *slot = value;
                Ok(())
            }
            None => Err(Error::Census(format!("no stored product {a} * {b}"))),
        }
    }

    pub fn multiply(&self, x: &QKElement, y: &QKElement) -> Result<QKElement> {
        let mut out = QKElement::zero();
        for (qa, a, ca) in x.terms() {
            for (qb, b, cb) in y.terms() {
                let c = ca.checked_mul(cb).ok_or(Error::Overflow("ring coefficient"))?;
                for (qp, l, cp) in self.product(a, b).terms() {
                    let k = c.checked_mul(cp).ok_or(Error::Overflow("ring coefficient"))?;
                    out.add_term(k, qa + qb + qp, l)?;
                }
            }
        }
        Ok(out)
    }

    pub fn max_q_degree(&self) -> u32 {
        self.entries.values().filter_map(QKElement::max_q_degree).max().unwrap_or(0)
    }

    /// Every label occurring in the table, plus the unit.
    pub fn labels(&self) -> BTreeSet<ClassLabel> {
        let mut out = BTreeSet::from([ClassLabel::UNIT]);
        for (&(a, b), v) in &self.entries {
            out.insert(a);
            out.insert(b);
            out.extend(v.terms().map(|(_, l, _)| l));
        }
        out
    }
}

pub fn multiply(t: &MultTable, a: &QKElement, b: &QKElement) -> Result<QKElement> {
    t.multiply(a, b)
}

/// Dense basis products: `[a][b][q][class]`, q-degrees up to `QMAX`.
const QMAX: usize = 2;
type Dense = Vec<Vec<[[i64; NUM_CLASSES]; QMAX + 1]>>;

fn dense_products(t: &MultTable) -> Option<Dense> {
    let all = ClassLabel::all();
    let mut out = vec![vec![[[0i64; NUM_CLASSES]; QMAX + 1]; NUM_CLASSES]; NUM_CLASSES];
    for &a in &all {
        for &b in &all {
            for (q, l, c) in t.product(a, b).terms() {
                *out[a.index()][b.index()].get_mut(q as usize)?.get_mut(l.index())? = c;
            }
        }
    }
    Some(out)
}

fn accumulate(out: &mut [[i64; NUM_CLASSES]], q0: usize, c: i64, p: &[[i64; NUM_CLASSES]; QMAX + 1]) -> Result<()> {
    for (dq, row) in p.iter().enumerate() {
        for (m, &x) in row.iter().enumerate() {
            if x != 0 {
                let k = c.checked_mul(x).ok_or(Error::Overflow("associativity sweep"))?;
                out[q0 + dq][m] = out[q0 + dq][m]
                    .checked_add(k)
                    .ok_or(Error::Overflow("associativity sweep"))?;
            }
        }
    }
    Ok(())
}

fn dense_to_element(v: &[[i64; NUM_CLASSES]]) -> QKElement {
    let all = ClassLabel::all();
    let mut e = QKElement::zero();
    for (q, row) in v.iter().enumerate() {
        for (m, &c) in row.iter().enumerate() {
            e.add_term(c, q as u32, all[m]).expect("no overflow on a single term");
        }
    }
    e
}

/// `(O_a O_b) O_c = O_a (O_b O_c)` over all ordered triples of the 27
/// classes, also asserting that no intermediate q-degree exceeds 4.
#[allow(clippy::needless_range_loop)]
pub fn verify_associativity(t: &MultTable) -> Result<CheckResult> {
    const NAME: &str = "associativity";
    let Some(dense) = dense_products(t) else {
        return Ok(CheckResult::new(NAME, false, format!("a product exceeds q-degree {QMAX}")));
    };
    let all = ClassLabel::all();
    let zero = [[0i64; NUM_CLASSES]; 2 * QMAX + 1];
    let mut checked = 0usize;
    for a in 0..NUM_CLASSES {
        for b in 0..NUM_CLASSES {
            for c in 0..NUM_CLASSES {
                let mut lhs = zero;
                let mut rhs = zero;
                for q in 0..=QMAX {
                    for m in 0..NUM_CLASSES {
                        let x = dense[a][b][q][m];
                        if x != 0 {
                            accumulate(&mut lhs, q, x, &dense[m][c])?;
                        }
                        let y = dense[b][c][q][m];
                        if y != 0 {
                            accumulate(&mut rhs, q, y, &dense[a][m])?;
                        }
                    }
                }
                checked += 1;
                if lhs != rhs {
                    let detail = format!(
                        "({0} * {1}) * {2} = {3} but {0} * ({1} * {2}) = {4}",
                        all[a],
                        all[b],
                        all[c],
                        dense_to_element(&lhs),
                        dense_to_element(&rhs)
                    );
                    return Ok(CheckResult::new(NAME, false, detail));
                }
            }
        }
    }
    Ok(CheckResult::new(NAME, true, format!("{checked} ordered triples, q-degree <= {}", 2 * QMAX)))
}

/// The maximal q-degree equals `bound` (so it is attained and never exceeded).
pub fn verify_degree_bound(t: &MultTable, bound: u32) -> CheckResult {
    let max = t.max_q_degree();
    let top = ClassLabel { codim: DIMENSION, variant: 0 };
    let witness = std::iter::once(&(top, top))
        .chain(&t.order)
        .find(|&&(a, b)| t.product(a, b).max_q_degree() == Some(max))
        .map(|&(a, b)| format!("{a} * {b} = {}", t.product(a, b)))
        .unwrap_or_default();
    CheckResult::new(
        "degree_bound",
        max == bound,
        format!("max q-degree {max}, expected {bound}; witness {witness}"),
    )
}

/// `(2 dim - codim(w)) / d` from the highest-q term of the square of the
/// point class.
pub fn infer_index(t: &MultTable) -> Result<i64> {
    let top = ClassLabel::new(DIMENSION, 0)?;
    let sq = t.product(top, top);
    let (q, w, _) = sq
        .terms()
        .max_by_key(|&(q, l, _)| (q, l))
        .ok_or_else(|| Error::NonIntegralIndex("square of the point class is zero".into()))?;
    let num = 2 * i64::from(DIMENSION) - i64::from(w.codim);
    if q == 0 || num % i64::from(q) != 0 {
        return Err(Error::NonIntegralIndex(format!("{num}/{q} from {top} * {top} = {sq}")));
    }
    Ok(num / i64::from(q))
}

fn offset(index: i64, u: ClassLabel, v: ClassLabel, q: u32, w: ClassLabel) -> i64 {
    i64::from(w.codim) + index * i64::from(q) - i64::from(u.codim) - i64::from(v.codim)
}

/// Every coefficient `N` of `q^d O_w` in `O_u O_v` has
/// `offset = codim(w) + index d - codim(u) - codim(v) >= 0` and sign
/// `(-1)^offset`.
pub fn verify_codim_sign(t: &MultTable, index: i64) -> CheckResult {
    let mut terms = 0usize;
    for &(u, v) in &t.order {
        for (q, w, c) in t.product(u, v).terms() {
            terms += 1;
            let off = offset(index, u, v, q, w);
            let expected = if off % 2 == 0 { 1 } else { -1 };
            if off < 0 || c.signum() != expected {
                let detail = format!("{u} * {v}: coefficient {c} on q^{q} {w} has offset {off}");
                return CheckResult::new("codim_sign", false, detail);
            }
        }
    }
    CheckResult::new("codim_sign", true, format!("{terms} terms, index {index}"))
}

/// Every product has a term of offset 0, so the index is not merely a bound.
pub fn verify_index_consistency(t: &MultTable, index: i64) -> CheckResult {
    let bad: Vec<String> = t
        .order
        .iter()
        .filter(|&&(u, v)| !t.product(u, v).terms().any(|(q, w, _)| offset(index, u, v, q, w) == 0))
        .map(|&(u, v)| format!("{u} * {v}"))
        .collect();
    CheckResult::new(
        "index_consistency",
        bad.is_empty(),
        if bad.is_empty() {
            format!("every row has a term of offset 0 for index {index}")
        } else {
            format!("rows without an offset-0 term: {}", bad.join(", "))
        },
    )
}

/// The table mentions exactly the 27 classes.
pub fn verify_census(t: &MultTable) -> CheckResult {
    let labels = t.labels();
    let expected: BTreeSet<_> = ClassLabel::all().into_iter().collect();
    CheckResult::new(
        "census",
        labels == expected && t.len() == NUM_PRODUCTS,
        format!("{} classes, {} products", labels.len(), t.len()),
    )
}

/// Checks the labelled words against `W^P` of `E6/P6`, and the number of
/// classes per codimension against the number of representatives per length.
pub fn link_labels(t: &MultTable, wp: &ParabolicQuotient) -> Result<CheckResult> {
    const NAME: &str = "link_labels";
    let rs = &wp.root_system;
    let fail = |msg: String| Ok(CheckResult::new(NAME, false, msg));
    if wp.len() != NUM_CLASSES || wp.dimension() != DIMENSION as usize {
        return fail(format!("|W^P| = {}, dimension {}", wp.len(), wp.dimension()));
    }
    let mut seen = BTreeMap::new();
    for (name, word) in LABEL_WORDS {
        let label: ClassLabel = name.parse()?;
        let u = rs.element_from_word(word)?;
        if u.length() != word.len() {
            return fail(format!("{name}: {} is not reduced", format_word(word)));
        }
        let Some(idx) = wp.index_of(&u) else {
            return fail(format!("{name}: not a minimal representative"));
        };
        if u.length() + label.codim as usize != DIMENSION as usize {
            return fail(format!("{name}: length {}", u.length()));
        }
        if let Some(other) = seen.insert(idx, label) {
            return fail(format!("{name} and {other} give the same coset"));
        }
    }
    let sizes = wp.rank_sizes();
    let labels = t.labels();
    for codim in 0..=DIMENSION {
        let classes = labels.iter().filter(|l| l.codim == codim).count();
        let reps = sizes[(DIMENSION - codim) as usize];
        if classes != reps {
            return fail(format!("codim {codim}: {classes} classes, {reps} representatives"));
        }
    }
    Ok(CheckResult::new(
        NAME,
        true,
        format!("{} words linked; per-length census {sizes:?}", LABEL_WORDS.len()),
    ))
}

/// The full table suite against the Weyl data of `E6/P6`.
pub fn verify_table(t: &MultTable, e6: &CominSpace) -> Result<Vec<CheckResult>> {
    let mut out = vec![verify_census(t), verify_associativity(t)?];
    out.push(verify_degree_bound(t, e6.diameter() as u32));
    match infer_index(t) {
        Ok(index) => {
            out.push(CheckResult::new("index", true, format!("index {index}")));
            out.push(verify_codim_sign(t, index));
            out.push(verify_index_consistency(t, index));
        }
        Err(err) => out.push(CheckResult::new("index", false, err.to_string())),
    }
    out.push(link_labels(t, &e6.wp)?);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(s: &str) -> ClassLabel {
        s.parse().unwrap()
    }

    fn e(s: &str) -> QKElement {
        s.parse().unwrap()
    }

    #[test]
    fn census() {
        let all = ClassLabel::all();
        assert_eq!(all.len(), NUM_CLASSES);
        for (i, x) in all.iter().enumerate() {
            assert_eq!(x.index(), i);
        }
        assert_eq!(l("O8''"), ClassLabel { codim: 8, variant: 2 });
        assert!(matches!("O3'".parse::<ClassLabel>(), Err(Error::Census(_))));
        assert!(matches!("O17".parse::<ClassLabel>(), Err(Error::Census(_))));
        assert!(matches!("O9''".parse::<ClassLabel>(), Err(Error::Census(_))));
    }

    #[test]
    fn parse_examples() {
        assert_eq!(e("O2"), QKElement::basis(l("O2")));
        assert_eq!(e("q^2 O8''"), QKElement::monomial(1, 2, l("O8''")));
        let x = e("O12 + 2 O12' + q - 2 O13 - 2 q O1 + q O2");
        assert_eq!(x.len(), 6);
        assert_eq!(x.coefficient(1, ClassLabel::UNIT), 1);
        assert_eq!(x.coefficient(1, l("O1")), -2);
        assert_eq!(x.to_string(), "O12 + 2 O12' - 2 O13 + q - 2 q O1 + q O2");
        assert_eq!(e("-q^2").to_string(), "-q^2");
        assert_eq!(e("O0 - O0").to_string(), "0");
    }

    #[test]
    fn parse_errors_have_positions() {
        let err = parse_table("O1 * O1 = O2\nO2 * O1 = 3 +\n").unwrap_err();
        assert!(matches!(err, Error::Syntax { line: 2, column: 13, .. }), "{err:?}");
        let err = parse_table("O1 * O1 = O2\nO1 * O1 = O2\n").unwrap_err();
        assert_eq!(err, Error::DuplicatePair("O1 * O1".into(), 2));
        let err = parse_table("O1 * O1 = O2\n").unwrap_err();
        assert_eq!(err, Error::EntryCount { expected: 351, found: 1 });
        assert!(matches!(parse_table("O1 * O0 = O1"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_table("O1 x O1 = O2"), Err(Error::Syntax { line: 1, column: 4, .. })));
    }

    #[test]
    fn shipped_rows() {
        let t = MultTable::shipped();
        assert_eq!(t.len(), 351);
        assert_eq!(t.product(l("O1"), l("O1")), e("O2"));
        assert_eq!(t.product(l("O16"), l("O16")), e("q^2 O8''"));
        assert_eq!(t.product(l("O6"), l("O6'")), e("O12 + 2 O12' + q - 2 O13 - 2 q O1 + q O2"));
        assert_eq!(t.max_q_degree(), 2);
    }

    #[test]
    fn multiply_examples() {
        let t = MultTable::shipped();
        assert_eq!(t.multiply(&QKElement::one(), &e("O5")).unwrap(), e("O5"));
        assert_eq!(t.multiply(&e("O2"), &e("O16")).unwrap(), e("q O6"));
        assert_eq!(t.multiply(&e("O1 + O2"), &e("O16")).unwrap(), e("q O5 + q O6"));
        let lhs = t.multiply(&t.multiply(&e("O1"), &e("O1")).unwrap(), &e("O16")).unwrap();
        let rhs = t.multiply(&e("O1"), &t.multiply(&e("O1"), &e("O16")).unwrap()).unwrap();
        assert_eq!(lhs, e("q O6"));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn round_trip() {
        let t = MultTable::shipped();
        let s = serialize(&t);
        let t2 = parse_table(&s).unwrap();
        assert_eq!(t2, t);
        assert_eq!(serialize(&t2), s);
    }

    #[test]
    fn shipped_table_checks() {
        let t = MultTable::shipped();
        assert!(verify_census(&t).pass);
        assert!(verify_associativity(&t).unwrap().pass);
        assert!(verify_degree_bound(&t, 2).pass);
        assert!(!verify_degree_bound(&t, 3).pass);
        assert_eq!(infer_index(&t).unwrap(), 12);
        assert!(verify_codim_sign(&t, 12).pass);
        assert!(verify_index_consistency(&t, 12).pass);
        assert!(!verify_codim_sign(&t, 11).pass);
    }

    #[test]
    fn codim_sign_rows() {
        let t = MultTable::shipped();
        let row = t.product(l("O7'"), l("O5"));
        let offs: Vec<i64> = row.terms().map(|(q, w, _)| offset(12, l("O7'"), l("O5"), q, w)).collect();
        assert_eq!(offs, vec![0, 0, 1]);
        let row = t.product(l("O3"), l("O3"));
        let offs: Vec<i64> = row.terms().map(|(q, w, _)| offset(12, l("O3"), l("O3"), q, w)).collect();
        let coeffs: Vec<i64> = row.terms().map(|(_, _, c)| c).collect();
        assert_eq!(offs, vec![0, 0, 1, 1, 2, 2, 3]);
        assert_eq!(coeffs, vec![3, 2, -5, -1, 1, 2, -1]);
    }

    #[test]
    fn negative_controls() {
        let base = MultTable::shipped();

        let mut t = base.clone();
        let bumped = t.product(l("O5"), l("O7'")).checked_add(&e("O12'")).unwrap();
        t.set_product(l("O5"), l("O7'"), bumped).unwrap();
        let r = verify_associativity(&t).unwrap();
        assert!(!r.pass);
        assert!(r.detail.contains(" * "), "{}", r.detail);

        let mut t = base.clone();
        t.set_product(l("O1"), l("O1"), e("O2 + q^3 O16")).unwrap();
        assert!(!verify_degree_bound(&t, 2).pass);

        let mut t = base.clone();
        t.set_product(l("O16"), l("O16"), e("q^2 O7")).unwrap();
        assert!(matches!(infer_index(&t), Err(Error::NonIntegralIndex(_))));
    }

    #[test]
    fn labels_link_to_weyl_data() {
        let e6 = CominSpace::parse("E6").unwrap();
        let t = MultTable::shipped();
        let r = link_labels(&t, &e6.wp).unwrap();
        assert!(r.pass, "{}", r.detail);
        let rs = e6.root_system();
        let o4p = rs.element_from_word(LABEL_WORDS[1].1).unwrap();
        assert_eq!(o4p.length(), 12);
        assert_eq!(rs.element_from_word(&[2, 4, 5, 6]).unwrap().length(), 4);
        let sizes: Vec<usize> = e6.wp.rank_sizes().into_iter().rev().collect();
        assert_eq!(sizes, vec![1, 1, 1, 1, 2, 2, 2, 2, 3, 2, 2, 2, 2, 1, 1, 1, 1]);
        assert!(verify_table(&t, &e6).unwrap().iter().all(|c| c.pass));
    }
}
