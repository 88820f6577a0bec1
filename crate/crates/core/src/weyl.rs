//! Weyl group elements, reduced words, Bruhat order and parabolic quotients.
//!
//! An element is stored as its integer action on the root lattice in the
//! simple-root basis (column `j` is the image of `alpha_j`). A word
//! `[i1, i2, ..., ik]` denotes the product `s_i1 s_i2 ... s_ik`, read left to
//! right as matrix multiplication.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};

use rand::Rng;

use crate::error::{Error, Result};
use crate::rootsys::{CartanType, RootSystem};

pub type Word = Vec<usize>;

#[derive(Debug, Clone)]
pub struct WeylElement {
    system: CartanType,
    rank: usize,
    action: Vec<i64>,
    // action on the weight lattice, fundamental-weight basis
    waction: Vec<i64>,
    length: usize,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.system == other.system && self.action == other.action
    }
}

impl Eq for WeylElement {}

impl Hash for WeylElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.system.hash(state);
        self.action.hash(state);
    }
}

impl WeylElement {
    pub fn length(&self) -> usize {
        self.length
    }

    pub fn system(&self) -> CartanType {
        self.system
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Row-major action matrix.
    pub fn action(&self) -> &[i64] {
        &self.action
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }

    /// Image of `alpha_i` (1-based node).
    pub fn image_of_simple(&self, i: usize) -> Vec<i64> {
        (0..self.rank)
            .map(|r| self.action[r * self.rank + i - 1])
            .collect()
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        (0..self.rank)
            .map(|r| {
                (0..self.rank)
                    .map(|c| self.action[r * self.rank + c] * v[c])
                    .sum()
            })
            .collect()
    }

    /// `u(alpha_i) < 0`, i.e. `ell(u s_i) < ell(u)`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        (0..self.rank).any(|r| self.action[r * self.rank + i - 1] < 0)
    }

    /// `ell(s_i u) < ell(u)`, read off from `<u(rho), alpha_i^vee> < 0`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        let row = &self.waction[(i - 1) * self.rank..i * self.rank];
        row.iter().sum::<i64>() < 0
    }

    /// Image of the fundamental weight `omega_i` in the fundamental-weight
    /// basis.
    pub fn image_of_fundamental_weight(&self, i: usize) -> Vec<i64> {
        (0..self.rank)
            .map(|r| self.waction[r * self.rank + i - 1])
            .collect()
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[len {}]", self.system, self.length)
    }
}

fn matmul(a: &[i64], b: &[i64], n: usize) -> Vec<i64> {
    let mut out = vec![0; n * n];
    for r in 0..n {
        for k in 0..n {
            let x = a[r * n + k];
            if x == 0 {
                continue;
            }
            for c in 0..n {
                out[r * n + c] += x * b[k * n + c];
            }
        }
    }
    out
}

pub fn format_word(word: &[usize]) -> String {
    word.iter()
        .map(|i| i.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Parses `7,6,5`; the empty string (or `e`) is the empty word.
pub fn parse_word(s: &str) -> Result<Word> {
    let s = s.trim();
    if s.is_empty() || s == "e" {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Word(s.to_string())))
        .collect()
}

impl RootSystem {
    fn element_from_matrices(&self, action: Vec<i64>, waction: Vec<i64>) -> WeylElement {
        let mut e = WeylElement {
            system: self.cartan_type(),
            rank: self.rank(),
            action,
            waction,
            length: 0,
        };
        e.length = self
            .positive_roots
            .iter()
            .filter(|r| e.apply(&r.0).iter().any(|&c| c < 0))
            .count();
        e
    }

    fn check_element(&self, u: &WeylElement) -> Result<()> {
        if u.system != self.cartan_type() {
            return Err(Error::MismatchedSystems(
                u.system.to_string(),
                self.cartan_type().to_string(),
            ));
        }
        Ok(())
    }

    pub fn identity(&self) -> WeylElement {
        let n = self.rank();
        let mut action = vec![0; n * n];
        for i in 0..n {
            action[i * n + i] = 1;
        }
        WeylElement {
            system: self.cartan_type(),
            rank: n,
            waction: action.clone(),
            action,
            length: 0,
        }
    }

    pub fn simple_reflection(&self, i: usize) -> Result<WeylElement> {
        self.check_node(i)?;
        let n = self.rank();
        let mut action = vec![0; n * n];
        let mut waction = vec![0; n * n];
        for j in 0..n {
            let mut e = vec![0; n];
            e[j] = 1;
            let col = self.reflect(i, &e)?;
            let wcol = self.reflect_weight(i, &e)?;
            for r in 0..n {
                action[r * n + j] = col[r];
                waction[r * n + j] = wcol[r];
            }
        }
        Ok(WeylElement {
            system: self.cartan_type(),
            rank: n,
            action,
            waction,
            length: 1,
        })
    }

    pub fn multiply(&self, a: &WeylElement, b: &WeylElement) -> Result<WeylElement> {
        self.check_element(a)?;
        self.check_element(b)?;
        Ok(self.element_from_matrices(
            matmul(&a.action, &b.action, self.rank()),
            matmul(&a.waction, &b.waction, self.rank()),
        ))
    }

    /// `s_i u`, with the length updated from the descent test.
    pub fn left_mul_simple(&self, i: usize, u: &WeylElement) -> Result<WeylElement> {
        self.check_element(u)?;
        let s = self.simple_reflection(i)?;
        let n = self.rank();
        Ok(WeylElement {
            system: u.system,
            rank: n,
            action: matmul(&s.action, &u.action, n),
            waction: matmul(&s.waction, &u.waction, n),
            length: if u.has_left_descent(i) { u.length - 1 } else { u.length + 1 },
        })
    }

    /// `u s_i`, with the length updated from the descent test.
    pub fn right_mul_simple(&self, u: &WeylElement, i: usize) -> Result<WeylElement> {
        self.check_element(u)?;
        let s = self.simple_reflection(i)?;
        let n = self.rank();
        Ok(WeylElement {
            system: u.system,
            rank: n,
            action: matmul(&u.action, &s.action, n),
            waction: matmul(&u.waction, &s.waction, n),
            length: if u.has_right_descent(i) { u.length - 1 } else { u.length + 1 },
        })
    }

    pub fn element_from_word(&self, word: &[usize]) -> Result<WeylElement> {
        let mut u = self.identity();
        for &i in word {
            u = self.right_mul_simple(&u, i)?;
        }
        Ok(u)
    }

    pub fn is_reduced(&self, word: &[usize]) -> Result<bool> {
        Ok(self.element_from_word(word)?.length() == word.len())
    }

    /// Nodes `i` with `ell(s_i u) < ell(u)`.
    pub fn left_descents(&self, u: &WeylElement) -> Result<Vec<usize>> {
        self.check_element(u)?;
        Ok((1..=self.rank()).filter(|&i| u.has_left_descent(i)).collect())
    }

    pub fn right_descents(&self, u: &WeylElement) -> Vec<usize> {
        (1..=self.rank()).filter(|&i| u.has_right_descent(i)).collect()
    }

    /// The canonical reduced word: the lexicographically smallest one, built
    /// by repeatedly stripping the smallest left descent.
    pub fn reduced_word(&self, u: &WeylElement) -> Result<Word> {
        let mut word = Vec::with_capacity(u.length());
        let mut cur = u.clone();
        while !cur.is_identity() {
            let i = self.left_descents(&cur)?[0];
            cur = self.left_mul_simple(i, &cur)?;
            word.push(i);
        }
        Ok(word)
    }

    pub fn inverse(&self, u: &WeylElement) -> Result<WeylElement> {
        let mut w = self.reduced_word(u)?;
        w.reverse();
        self.element_from_word(&w)
    }

    /// Enumerates reduced words by depth-first search over left descents, in
    /// lexicographic order, stopping after `cap` words. The flag reports
    /// whether the enumeration was exhaustive.
    pub fn all_reduced_words(&self, u: &WeylElement, cap: usize) -> Result<(Vec<Word>, bool)> {
        if cap == 0 {
            return Err(Error::Config("cap must be at least 1".into()));
        }
        let mut out = Vec::new();
        let mut prefix = Vec::new();
        let exhaustive = self.words_dfs(u, cap, &mut prefix, &mut out)?;
        Ok((out, exhaustive))
    }

    fn words_dfs(
        &self,
        u: &WeylElement,
        cap: usize,
        prefix: &mut Word,
        out: &mut Vec<Word>,
    ) -> Result<bool> {
        if u.is_identity() {
            if out.len() == cap {
                return Ok(false);
            }
            out.push(prefix.clone());
            return Ok(true);
        }
        for i in self.left_descents(u)? {
            let next = self.left_mul_simple(i, u)?;
            prefix.push(i);
            let complete = self.words_dfs(&next, cap, prefix, out)?;
            prefix.pop();
            if !complete {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// A reduced word chosen by a uniformly random left descent at each step.
    pub fn random_reduced_word<R: Rng>(&self, u: &WeylElement, rng: &mut R) -> Result<Word> {
        let mut word = Vec::with_capacity(u.length());
        let mut cur = u.clone();
        while !cur.is_identity() {
            let d = self.left_descents(&cur)?;
            let i = d[rng.gen_range(0..d.len())];
            cur = self.left_mul_simple(i, &cur)?;
            word.push(i);
        }
        Ok(word)
    }

    /// Longest element of the standard parabolic subgroup generated by
    /// `{s_i : i in subset}`.
    pub fn longest_element(&self, subset: &BTreeSet<usize>) -> Result<WeylElement> {
        for &i in subset {
            self.check_node(i)?;
        }
        let mut w = self.identity();
        while let Some(&i) = subset.iter().find(|&&i| !w.has_right_descent(i)) {
            w = self.right_mul_simple(&w, i)?;
        }
        Ok(w)
    }

    /// Shortest element of the coset `w W_P`, where `P` is the maximal
    /// parabolic of `node`.
    pub fn min_rep(&self, w: &WeylElement, node: usize) -> Result<WeylElement> {
        self.check_node(node)?;
        self.check_element(w)?;
        let mut w = w.clone();
        while let Some(i) = (1..=self.rank()).find(|&i| i != node && w.has_right_descent(i)) {
            w = self.right_mul_simple(&w, i)?;
        }
        Ok(w)
    }

    pub fn is_min_rep(&self, w: &WeylElement, node: usize) -> bool {
        (1..=self.rank()).all(|i| i == node || !w.has_right_descent(i))
    }

    /// Bruhat order by the lifting property, memoized per call.
    pub fn bruhat_leq(&self, v: &WeylElement, u: &WeylElement) -> Result<bool> {
        self.check_element(v)?;
        self.check_element(u)?;
        let mut memo = HashMap::new();
        self.bruhat_rec(v, u, &mut memo)
    }

    pub(crate) fn bruhat_rec(
        &self,
        v: &WeylElement,
        u: &WeylElement,
        memo: &mut HashMap<(Vec<i64>, Vec<i64>), bool>,
    ) -> Result<bool> {
        if v.is_identity() {
            return Ok(true);
        }
        if v.length() > u.length() {
            return Ok(false);
        }
        if v.length() == u.length() {
            return Ok(v == u);
        }
        let key = (v.action.clone(), u.action.clone());
        if let Some(&b) = memo.get(&key) {
            return Ok(b);
        }
        // Pick s with su < u.
        let i = (1..=self.rank())
            .find(|&i| u.has_left_descent(i))
            .expect("non-identity element has a left descent");
        let su = self.left_mul_simple(i, u)?;
        let result = if v.has_left_descent(i) {
            let sv = self.left_mul_simple(i, v)?;
            self.bruhat_rec(&sv, &su, memo)?
        } else {
            self.bruhat_rec(v, &su, memo)?
        };
        memo.insert(key, result);
        Ok(result)
    }
}

/// The minimal coset representatives `W^P` for a maximal parabolic `P`,
/// indexed by the orbit of the fundamental weight of its node.
#[derive(Debug, Clone)]
pub struct ParabolicQuotient {
    pub root_system: RootSystem,
    pub node: usize,
    /// Sorted by length; index 0 is the identity.
    pub reps: Vec<WeylElement>,
    /// BFS words; each ends with `node` unless empty.
    pub bfs_words: Vec<Word>,
    pub weights: Vec<Vec<i64>>,
    pub u_max: usize,
    pub w_p: WeylElement,
    bruhat: Vec<bool>,
    by_weight: HashMap<Vec<i64>, usize>,
    by_action: HashMap<Vec<i64>, usize>,
}

pub fn enumerate_wp(rs: &RootSystem, node: usize) -> Result<ParabolicQuotient> {
    ParabolicQuotient::new(rs.clone(), node)
}

impl ParabolicQuotient {
    pub fn new(rs: RootSystem, node: usize) -> Result<Self> {
        rs.check_node(node)?;
        if !rs.cominuscule_nodes().contains(&node) {
            return Err(Error::Config(format!(
                "node {node} is not cominuscule in {}",
                rs.cartan_type()
            )));
        }
        let n = rs.rank();
        let mut omega = vec![0i64; n];
        omega[node - 1] = 1;

        let mut reps = vec![rs.identity()];
        let mut bfs_words: Vec<Word> = vec![Vec::new()];
        let mut weights = vec![omega.clone()];
        let mut by_weight = HashMap::from([(omega, 0usize)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(k) = queue.pop_front() {
            for i in 1..=n {
                if weights[k][i - 1] <= 0 {
                    continue;
                }
                let mu = rs.reflect_weight(i, &weights[k])?;
                if by_weight.contains_key(&mu) {
                    continue;
                }
                let elem = rs.left_mul_simple(i, &reps[k])?;
                let mut word = vec![i];
                word.extend_from_slice(&bfs_words[k]);
                by_weight.insert(mu.clone(), reps.len());
                queue.push_back(reps.len());
                reps.push(elem);
                bfs_words.push(word);
                weights.push(mu);
            }
        }

        let max_len = reps.iter().map(|r| r.length()).max().unwrap_or(0);
        let tops: Vec<usize> = (0..reps.len()).filter(|&k| reps[k].length() == max_len).collect();
        if tops.len() != 1 {
            return Err(Error::Config("quotient has no unique maximal element".into()));
        }
        let u_max = tops[0];

        let levi: BTreeSet<usize> = (1..=n).filter(|&i| i != node).collect();
        let w_p = rs.longest_element(&levi)?;

        let by_action = reps
            .iter()
            .enumerate()
            .map(|(k, r)| (r.action.clone(), k))
            .collect();

        let mut q = ParabolicQuotient {
            root_system: rs,
            node,
            reps,
            bfs_words,
            weights,
            u_max,
            w_p,
            bruhat: Vec::new(),
            by_weight,
            by_action,
        };
        q.bruhat = q.compute_bruhat()?;
        Ok(q)
    }

    fn compute_bruhat(&self) -> Result<Vec<bool>> {
        let m = self.reps.len();
        let mut memo = HashMap::new();
        let mut table = vec![false; m * m];
        for a in 0..m {
            for b in 0..m {
                table[a * m + b] =
                    self.root_system
                        .bruhat_rec(&self.reps[a], &self.reps[b], &mut memo)?;
            }
        }
        Ok(table)
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn u_max(&self) -> &WeylElement {
        &self.reps[self.u_max]
    }

    pub fn identity_index(&self) -> usize {
        0
    }

    pub fn dimension(&self) -> usize {
        self.u_max().length()
    }

    /// Index of an exact minimal representative.
    pub fn index_of(&self, u: &WeylElement) -> Option<usize> {
        if u.system() != self.root_system.cartan_type() {
            return None;
        }
        self.by_action.get(u.action()).copied()
    }

    /// Index of the coset `w W_P` for an arbitrary element.
    pub fn coset_index(&self, w: &WeylElement) -> Result<usize> {
        let weight = w.image_of_fundamental_weight(self.node);
        self.by_weight
            .get(&weight)
            .copied()
            .ok_or_else(|| Error::Config("weight outside the orbit".into()))
    }

    pub fn index_of_weight(&self, weight: &[i64]) -> Option<usize> {
        self.by_weight.get(weight).copied()
    }

    pub fn weight_of(&self, u: &WeylElement) -> Option<&[i64]> {
        self.index_of(u).map(|k| self.weights[k].as_slice())
    }

    /// Precomputed Bruhat relation `reps[a] <= reps[b]`.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.bruhat[a * self.reps.len() + b]
    }

    /// Number of representatives of each length `0..=dim`.
    pub fn rank_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.dimension() + 1];
        for r in &self.reps {
            sizes[r.length()] += 1;
        }
        sizes
    }

    pub fn min_rep(&self, w: &WeylElement) -> Result<WeylElement> {
        self.root_system.min_rep(w, self.node)
    }
}
