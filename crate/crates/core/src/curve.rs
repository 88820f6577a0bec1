//! Degree distance, curve neighborhoods and the special Schubert varieties
//! `X_d` of cominuscule spaces.
//!
//! Schubert varieties are identified with their minimal coset
//! representatives. The degree-one neighborhood of `X(u)` is
//! `X(u w_P s_alpha)` below the top, and `X` itself at the top; larger
//! degrees iterate it.

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::report::CheckResult;
use crate::rootsys::{CartanType, RootSystem};
use crate::weyl::{format_word, ParabolicQuotient, WeylElement, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    /// `Gr(m, n)`: `m`-planes in `C^n`.
    Gr { m: usize, n: usize },
    /// `LG(n, 2n)`.
    LG(usize),
    /// `OG(n, 2n)`.
    OG(usize),
    /// The quadric `Q^n`.
    Q(usize),
    E6P6,
    E7P7,
}

impl Family {
    /// The Lie type and cominuscule node realizing the family.
    pub fn root_data(self) -> Result<(CartanType, usize)> {
        let bad = || Error::Config(format!("unsupported space {self}"));
        Ok(match self {
            Family::Gr { m, n } if m >= 1 && m < n => (CartanType::A(n - 1), m),
            Family::LG(n) if n >= 2 => (CartanType::C(n), n),
            Family::OG(n) if n >= 3 => (CartanType::D(n), n),
            Family::Q(n) if n >= 3 && n % 2 == 1 => (CartanType::B(n.div_ceil(2)), 1),
            Family::Q(n) if n >= 4 => (CartanType::D((n + 2) / 2), 1),
            Family::E6P6 => (CartanType::E6, 6),
            Family::E7P7 => (CartanType::E7, 7),
            _ => return Err(bad()),
        })
    }

    /// Dimension from the closed-form family formula.
    pub fn expected_dimension(self) -> usize {
        match self {
            Family::Gr { m, n } => m * (n - m),
            Family::LG(n) => n * (n + 1) / 2,
            Family::OG(n) => n * (n - 1) / 2,
            Family::Q(n) => n,
            Family::E6P6 => 16,
            Family::E7P7 => 27,
        }
    }

    /// `(d_X(2), d_X(3))` from the closed-form family formulas.
    pub fn dx_table(self) -> DegreeTable {
        let (d2, d3) = match self {
            Family::Gr { m, n } => {
                let k = n - m;
                (m.min(k), (2 * m).min(2 * k).min(m.max(k)))
            }
            Family::LG(n) => (n, n),
            Family::OG(n) => (n / 2, n.div_ceil(2)),
            Family::Q(_) => (2, 2),
            Family::E6P6 => (2, 4),
            Family::E7P7 => (3, 3),
        };
        DegreeTable { d2, d3 }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Gr { m, n } => write!(f, "Gr({m},{n})"),
            Family::LG(n) => write!(f, "LG({n})"),
            Family::OG(n) => write!(f, "OG({n})"),
            Family::Q(n) => write!(f, "Q({n})"),
            Family::E6P6 => write!(f, "E6"),
            Family::E7P7 => write!(f, "E7"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    /// Accepts `Gr(m,n)`, `LG(n)`, `OG(n)`, `Q(n)`, `E6`, `E7`.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::Config(format!("unrecognized space {s:?}"));
        match compact.to_ascii_uppercase().as_str() {
            "E6" | "E6P6" | "E6/P6" => return Ok(Family::E6P6),
            "E7" | "E7P7" | "E7/P7" => return Ok(Family::E7P7),
            _ => {}
        }
        let open = compact.find('(').ok_or_else(bad)?;
        if !compact.ends_with(')') {
            return Err(bad());
        }
        let args: Vec<usize> = compact[open + 1..compact.len() - 1]
            .split(',')
            .map(|t| t.parse::<usize>().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        let family = match (&compact[..open].to_ascii_uppercase()[..], args.as_slice()) {
            ("GR", [m, n]) => Family::Gr { m: *m, n: *n },
            ("LG", [n]) => Family::LG(*n),
            ("LG", [n, two_n]) if *two_n == 2 * n => Family::LG(*n),
            ("OG", [n]) => Family::OG(*n),
            ("OG", [n, two_n]) if *two_n == 2 * n => Family::OG(*n),
            ("Q", [n]) => Family::Q(*n),
            _ => return Err(bad()),
        };
        family.root_data()?;
        Ok(family)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DegreeTable {
    pub d2: usize,
    pub d3: usize,
}

/// A cominuscule space `G/P` with its precomputed quotient `W^P`.
#[derive(Debug, Clone)]
pub struct CominSpace {
    pub family: Family,
    pub node: usize,
    pub wp: ParabolicQuotient,
}

#[derive(Debug, Clone, Serialize)]
pub struct Dx3Row {
    pub d: usize,
    pub x_small: Word,
    pub steps: usize,
    pub result: Word,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Dx3Report {
    pub space: String,
    pub d2: usize,
    pub d3: usize,
    pub rows: Vec<Dx3Row>,
    pub pass: bool,
}

impl CominSpace {
    pub fn new(family: Family) -> Result<Self> {
        let (t, node) = family.root_data()?;
        let wp = ParabolicQuotient::new(RootSystem::new(t), node)?;
        Ok(CominSpace { family, node, wp })
    }

    pub fn parse(space: &str) -> Result<Self> {
        Self::new(space.parse()?)
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.wp.root_system
    }

    pub fn u_max(&self) -> &WeylElement {
        self.wp.u_max()
    }

    pub fn dimension(&self) -> usize {
        self.wp.dimension()
    }

    pub fn dx_table(&self) -> DegreeTable {
        self.family.dx_table()
    }

    pub fn element(&self, word: &[usize]) -> Result<WeylElement> {
        self.root_system().element_from_word(word)
    }

    pub fn word(&self, u: &WeylElement) -> Result<Word> {
        self.root_system().reduced_word(u)
    }

    fn require_rep(&self, u: &WeylElement) -> Result<usize> {
        self.wp.index_of(u).ok_or(Error::NotMinimal)
    }

    /// Number of occurrences of the cominuscule reflection in the canonical
    /// reduced word of `u`.
    pub fn deg_dist(&self, u: &WeylElement) -> Result<usize> {
        self.require_rep(u)?;
        Ok(self.word(u)?.iter().filter(|&&i| i == self.node).count())
    }

    pub fn diameter(&self) -> usize {
        self.deg_dist(self.u_max())
            .expect("u_max is a minimal representative")
    }

    pub fn gamma1(&self, u: &WeylElement) -> Result<WeylElement> {
        self.require_rep(u)?;
        if u == self.u_max() {
            return Ok(u.clone());
        }
        let rs = self.root_system();
        let x = rs.multiply(u, &self.wp.w_p)?;
        let x = rs.right_mul_simple(&x, self.node)?;
        rs.min_rep(&x, self.node)
    }

    pub fn gamma(&self, u: &WeylElement, d: usize) -> Result<WeylElement> {
        let mut cur = u.clone();
        self.require_rep(&cur)?;
        for _ in 0..d {
            if cur == *self.u_max() {
                break;
            }
            cur = self.gamma1(&cur)?;
        }
        Ok(cur)
    }

    /// Prefixes of the canonical word of `u` ending at each occurrence of the
    /// cominuscule reflection, preceded by the identity.
    pub fn line_chain(&self, u: &WeylElement) -> Result<Vec<WeylElement>> {
        self.require_rep(u)?;
        let word = self.word(u)?;
        let mut chain = vec![self.root_system().identity()];
        for (j, &i) in word.iter().enumerate() {
            if i == self.node {
                chain.push(self.element(&word[..=j])?);
            }
        }
        Ok(chain)
    }

    /// Length of `X_d` by family.
    fn x_small_length(&self, d: usize) -> usize {
        if d == 0 {
            return 0;
        }
        match self.family {
            Family::Gr { .. } => d * d,
            Family::LG(_) => d * (d + 1) / 2,
            Family::OG(_) => d * (2 * d - 1),
            Family::Q(n) => [1, n][d - 1],
            Family::E6P6 => [1, 8][d - 1],
            Family::E7P7 => [1, 10, 27][d - 1],
        }
    }

    fn x_small_word(&self, d: usize) -> Word {
        if d == 0 {
            return Vec::new();
        }
        if d == 1 {
            return vec![self.node];
        }
        // Boxes listed in row-reading order; each box prepends one letter.
        let boxes: Vec<usize> = match self.family {
            Family::Gr { m, .. } => (1..=d)
                .flat_map(|r| (1..=d).map(move |c| m + c - r))
                .collect(),
            Family::LG(n) => (1..=d)
                .flat_map(|r| (r..=d).map(move |c| n - (c - r)))
                .collect(),
            Family::OG(n) => (1..2 * d)
                .flat_map(|r| {
                    (r..2 * d).map(move |c| match (c == r, r % 2) {
                        (true, 1) => n,
                        (true, _) => n - 1,
                        (false, _) => n - 1 - (c - r),
                    })
                })
                .collect(),
            Family::Q(_) => {
                return self.word(self.u_max()).expect("u_max has a word");
            }
            Family::E6P6 => return vec![6, 5, 4, 2, 3, 4, 5, 6],
            Family::E7P7 if d == 2 => return vec![7, 6, 5, 4, 2, 3, 4, 5, 6, 7],
            Family::E7P7 => return self.word(self.u_max()).expect("u_max has a word"),
        };
        boxes.into_iter().rev().collect()
    }

    /// The representative of the special Schubert variety `X_d`. The
    /// construction is validated before it is returned.
    pub fn x_small(&self, d: usize) -> Result<WeylElement> {
        let diam = self.dx_table().d2;
        if d > diam {
            return Err(Error::DegreeOutOfRange(d, diam));
        }
        let word = self.x_small_word(d);
        let u = self.element(&word)?;
        let fail = |why: String| Error::Config(format!("X_{d} of {}: {why}", self.family));
        if u.length() != word.len() {
            return Err(fail(format!("word {} is not reduced", format_word(&word))));
        }
        if self.wp.index_of(&u).is_none() {
            return Err(fail("not a minimal representative".into()));
        }
        if u.length() != self.x_small_length(d) {
            return Err(fail(format!("length {}", u.length())));
        }
        if self.deg_dist(&u)? != d {
            return Err(fail("wrong degree distance".into()));
        }
        Ok(u)
    }

    /// Checks `Gamma_{d3 - d}(X_d) = X` for every `d` in `[0, d_X(2)]`.
    pub fn verify_dx3(&self) -> Result<Dx3Report> {
        let DegreeTable { d2, d3 } = self.dx_table();
        let mut rows = Vec::new();
        for d in 0..=d2 {
            let x = self.x_small(d)?;
            let steps = d3 - d;
            let g = self.gamma(&x, steps)?;
            rows.push(Dx3Row {
                d,
                x_small: self.word(&x)?,
                steps,
                result: self.word(&g)?,
                pass: g == *self.u_max(),
            });
        }
        let pass = rows.iter().all(|r| r.pass);
        Ok(Dx3Report {
            space: self.family.to_string(),
            d2,
            d3,
            rows,
            pass,
        })
    }

    /// `gamma1` on representative indices.
    pub fn gamma1_table(&self) -> Result<Vec<usize>> {
        self.wp
            .reps
            .iter()
            .map(|u| {
                let g = self.gamma1(u)?;
                self.wp.index_of(&g).ok_or(Error::NotMinimal)
            })
            .collect()
    }

    /// Degree distance computed from every reduced word of `u` (when there are
    /// at most `cap`), otherwise from `samples` random reduced words.
    pub fn deg_dist_over_words(
        &self,
        u: &WeylElement,
        cap: usize,
        samples: usize,
        rng: &mut ChaCha8Rng,
    ) -> Result<Vec<usize>> {
        let rs = self.root_system();
        let count = |w: &Word| w.iter().filter(|&&i| i == self.node).count();
        let (words, exhaustive) = rs.all_reduced_words(u, cap)?;
        if exhaustive {
            return Ok(words.iter().map(count).collect());
        }
        (0..samples)
            .map(|_| rs.random_reduced_word(u, rng).map(|w| count(&w)))
            .collect()
    }

    /// The full invariant suite for this space.
    pub fn verify_all(&self) -> Result<Vec<CheckResult>> {
        let mut out = Vec::new();
        let wp = &self.wp;
        let rs = self.root_system();
        let m = wp.len();

        let dim = self.dimension();
        out.push(CheckResult::new(
            "dimension",
            dim == self.family.expected_dimension(),
            format!("l(u_max) = {dim}, family formula {}", self.family.expected_dimension()),
        ));

        let membership = wp.reps.iter().all(|u| {
            (1..=rs.rank()).all(|i| i == self.node || !u.has_right_descent(i))
                && (u.is_identity() || u.has_right_descent(self.node))
        });
        out.push(CheckResult::new(
            "wp_membership",
            membership,
            format!("{m} representatives, right descents only at node {}", self.node),
        ));

        let depth_ok = wp
            .reps
            .iter()
            .zip(&wp.bfs_words)
            .all(|(u, w)| u.length() == w.len());
        out.push(CheckResult::new(
            "bfs_depth_equals_length",
            depth_ok,
            "orbit depth equals inversion count".to_string(),
        ));

        let mut order_ok = true;
        for a in 0..m {
            order_ok &= wp.leq(a, a);
            for b in 0..m {
                if a != b && wp.leq(a, b) {
                    order_ok &= !wp.leq(b, a) && wp.reps[a].length() < wp.reps[b].length();
                    for c in 0..m {
                        if wp.leq(b, c) {
                            order_ok &= wp.leq(a, c);
                        }
                    }
                }
            }
        }
        out.push(CheckResult::new(
            "bruhat_partial_order",
            order_ok,
            format!("reflexive, antisymmetric, transitive on {m} elements"),
        ));

        let table = self.dx_table();
        let diam = self.diameter();
        out.push(CheckResult::new(
            "diameter",
            diam == table.d2,
            format!("deg_dist(u_max) = {diam}, d_X(2) = {}", table.d2),
        ));

        let g1 = self.gamma1_table()?;
        let mut mono = true;
        let mut expand = true;
        let mut deg_step = true;
        for a in 0..m {
            expand &= wp.leq(a, g1[a]);
            if a != wp.u_max {
                expand &= wp.reps[g1[a]].length() > wp.reps[a].length();
            }
            deg_step &= self.deg_dist(&wp.reps[g1[a]])? <= self.deg_dist(&wp.reps[a])? + 1;
            for b in 0..m {
                if wp.leq(a, b) {
                    mono &= wp.leq(g1[a], g1[b]);
                }
            }
        }
        out.push(CheckResult::new("gamma1_monotone", mono, "u <= v implies gamma1(u) <= gamma1(v)"));
        out.push(CheckResult::new("gamma1_expanding", expand, "u <= gamma1(u), strictly longer below u_max"));
        out.push(CheckResult::new("gamma1_degree_step", deg_step, "deg_dist(gamma1(u)) <= deg_dist(u) + 1"));

        let e = rs.identity();
        let sat = self.gamma(&e, diam)? == *self.u_max()
            && (diam == 0 || self.gamma(&e, diam - 1)? != *self.u_max());
        out.push(CheckResult::new(
            "saturation",
            sat,
            format!("gamma(e, {diam}) = X and gamma(e, {}) != X", diam.saturating_sub(1)),
        ));

        let mut chain_ok = true;
        for u in &wp.reps {
            let chain = self.line_chain(u)?;
            chain_ok &= chain.len() == self.deg_dist(u)? + 1;
            chain_ok &= wp.coset_index(chain.last().expect("non-empty"))? == wp.index_of(u).ok_or(Error::NotMinimal)?;
            for pair in chain.windows(2) {
                let step = rs.multiply(&rs.inverse(&pair[0])?, &pair[1])?;
                chain_ok &= self.deg_dist(&wp.min_rep(&step)?)? == 1;
            }
        }
        out.push(CheckResult::new("line_chain", chain_ok, "consecutive chain steps have degree distance 1"));

        let mut xs = Vec::new();
        let mut xs_ok = true;
        for d in 0..=table.d2 {
            match self.x_small(d) {
                Ok(x) => xs.push(format!("X_{d}: l = {}", x.length())),
                Err(err) => {
                    xs_ok = false;
                    xs.push(err.to_string());
                }
            }
        }
        out.push(CheckResult::new("x_small", xs_ok, xs.join("; ")));

        let report = self.verify_dx3()?;
        out.push(CheckResult::new(
            "dx3",
            report.pass,
            format!("Gamma_(d3-d)(X_d) = X for d in 0..={} (d3 = {})", report.d2, report.d3),
        ));

        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        let mut words_ok = true;
        for u in &wp.reps {
            let counts = self.deg_dist_over_words(u, 200, 50, &mut rng)?;
            let d = self.deg_dist(u)?;
            words_ok &= counts.iter().all(|&c| c == d);
        }
        out.push(CheckResult::new(
            "word_independence",
            words_ok,
            "node count agrees across reduced words",
        ));

        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn space(s: &str) -> CominSpace {
        CominSpace::parse(s).unwrap()
    }

    #[test]
    fn parse_spaces() {
        assert_eq!("Gr(2,5)".parse::<Family>().unwrap(), Family::Gr { m: 2, n: 5 });
        assert_eq!("LG(3,6)".parse::<Family>().unwrap(), Family::LG(3));
        assert_eq!(" OG(5) ".parse::<Family>().unwrap(), Family::OG(5));
        assert_eq!("E6".parse::<Family>().unwrap(), Family::E6P6);
        assert!("Gr(5,5)".parse::<Family>().is_err());
        assert!("Q(2)".parse::<Family>().is_err());
        assert!("F4".parse::<Family>().is_err());
        assert!("Gr(2,".parse::<Family>().is_err());
    }

    #[test]
    fn quadric_types() {
        assert_eq!(Family::Q(5).root_data().unwrap(), (CartanType::B(3), 1));
        assert_eq!(Family::Q(6).root_data().unwrap(), (CartanType::D(4), 1));
        for n in 3..=8 {
            assert_eq!(space(&format!("Q({n})")).dimension(), n);
        }
    }

    #[test]
    fn deg_dist_examples() {
        let e6 = space("E6");
        let u = e6.element(&[6, 5, 4, 2, 3, 4, 5, 6]).unwrap();
        assert_eq!(e6.deg_dist(&u).unwrap(), 2);
        assert_eq!(e6.deg_dist(&e6.root_system().identity()).unwrap(), 0);
        let gr = space("Gr(3,7)");
        assert_eq!(gr.deg_dist(gr.u_max()).unwrap(), 3);
        // not minimal
        let s5 = e6.element(&[5]).unwrap();
        assert_eq!(e6.deg_dist(&s5), Err(Error::NotMinimal));
    }

    #[test]
    fn diameter_examples() {
        assert_eq!(space("Q(5)").diameter(), 2);
        assert_eq!(space("E7").diameter(), 3);
        assert_eq!(space("Gr(2,6)").diameter(), 2);
    }

    #[test]
    fn dx_table_examples() {
        assert_eq!(Family::Gr { m: 3, n: 7 }.dx_table(), DegreeTable { d2: 3, d3: 4 });
        assert_eq!(Family::OG(5).dx_table(), DegreeTable { d2: 2, d3: 3 });
        assert_eq!(Family::E6P6.dx_table(), DegreeTable { d2: 2, d3: 4 });
    }

    #[test]
    fn gamma1_examples() {
        let gr = space("Gr(2,4)");
        let s2 = gr.element(&[2]).unwrap();
        assert_eq!(gr.gamma1(&s2).unwrap(), *gr.u_max());
        assert_eq!(gr.gamma1(gr.u_max()).unwrap(), *gr.u_max());

        let e7 = space("E7");
        let g = e7.gamma1(&e7.element(&[7]).unwrap()).unwrap();
        let expected = [1, 3, 4, 2, 5, 4, 3, 1, 7, 6, 5, 4, 2, 3, 4, 5, 6, 7];
        assert_eq!(g, e7.element(&expected).unwrap());
        assert_eq!(e7.word(&g).unwrap(), expected.to_vec());
    }

    #[test]
    fn gamma_examples() {
        let e7 = space("E7");
        let s7 = e7.element(&[7]).unwrap();
        assert_eq!(e7.gamma(&s7, 0).unwrap(), s7);
        assert_eq!(e7.gamma(&s7, 2).unwrap(), *e7.u_max());
        assert_ne!(e7.gamma(&s7, 1).unwrap(), *e7.u_max());
        for s in ["Gr(3,7)", "LG(4)", "OG(6)", "Q(7)", "E6"] {
            let x = space(s);
            let e = x.root_system().identity();
            assert_eq!(x.gamma(&e, x.diameter()).unwrap(), *x.u_max(), "{s}");
        }
    }

    #[test]
    fn line_chain_examples() {
        let e6 = space("E6");
        let e = e6.root_system().identity();
        assert_eq!(e6.line_chain(&e).unwrap(), vec![e.clone()]);
        let u = e6.element(&[6, 5, 4, 2, 3, 4, 5, 6]).unwrap();
        let chain = e6.line_chain(&u).unwrap();
        assert_eq!(chain, vec![e, e6.element(&[6]).unwrap(), u]);

        let gr = space("Gr(2,4)");
        assert_eq!(gr.word(gr.u_max()).unwrap(), vec![2, 1, 3, 2]);
        let chain = gr.line_chain(gr.u_max()).unwrap();
        assert_eq!(chain.len(), 3);
        assert_eq!(chain[1], gr.element(&[2]).unwrap());
        assert_eq!(chain[2], *gr.u_max());
    }

    #[test]
    fn x_small_examples() {
        let e7 = space("E7");
        let x2 = e7.x_small(2).unwrap();
        assert_eq!(e7.word(&x2).unwrap(), vec![7, 6, 5, 4, 2, 3, 4, 5, 6, 7]);
        assert_eq!(e7.x_small(0).unwrap(), e7.root_system().identity());
        assert_eq!(e7.x_small(4), Err(Error::DegreeOutOfRange(4, 3)));
        let gr = space("Gr(3,5)");
        let x = gr.x_small(2).unwrap();
        assert_eq!((x.length(), gr.deg_dist(&x).unwrap()), (4, 2));
    }

    #[test]
    fn cayley_plane_divisor() {
        let e6 = space("E6");
        let g = e6.gamma1(&e6.x_small(2).unwrap()).unwrap();
        assert_eq!(g.length(), 15);
        assert_eq!(e6.wp.reps.iter().filter(|r| r.length() == 15).count(), 1);
        assert_eq!(e6.dimension(), 16);
    }

    #[test]
    fn dx3_examples() {
        for s in ["Gr(2,5)", "E6", "LG(3)"] {
            let r = space(s).verify_dx3().unwrap();
            assert!(r.pass, "{s}: {r:?}");
        }
        let r = space("E6").verify_dx3().unwrap();
        assert_eq!(r.rows.len(), 3);
    }

    #[test]
    fn verify_all_small_spaces() {
        for s in ["Gr(2,4)", "Gr(3,6)", "LG(3)", "OG(5)", "Q(6)", "Q(7)", "E6"] {
            for c in space(s).verify_all().unwrap() {
                assert!(c.pass, "{s}: {c:?}");
            }
        }
    }
}
