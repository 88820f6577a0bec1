//! Finite root systems of types A, B, C, D, E6 and E7 with exact integer
//! arithmetic.
//!
//! Nodes follow Bourbaki numbering and are 1-based in every public function.
//! Roots are integer vectors in the simple-root basis, weights are integer
//! vectors in the fundamental-weight basis.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum CartanType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    E6,
    E7,
}

impl CartanType {
    /// Validates a `(label, rank)` pair such as `("D", 5)` or `("E7", 7)`.
    pub fn new(label: &str, rank: usize) -> Result<Self> {
        let t = match label.trim().to_ascii_uppercase().as_str() {
            "A" if rank >= 1 => CartanType::A(rank),
            "B" if rank >= 2 => CartanType::B(rank),
            "C" if rank >= 2 => CartanType::C(rank),
            "D" if rank >= 3 => CartanType::D(rank),
            "E6" | "E" if rank == 6 => CartanType::E6,
            "E7" | "E" if rank == 7 => CartanType::E7,
            _ => {
                return Err(Error::Config(format!(
                    "unsupported root system {label}{rank}"
                )))
            }
        };
        Ok(t)
    }

    pub fn rank(self) -> usize {
        match self {
            CartanType::A(n) | CartanType::B(n) | CartanType::C(n) | CartanType::D(n) => n,
            CartanType::E6 => 6,
            CartanType::E7 => 7,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            CartanType::A(_) => "A",
            CartanType::B(_) => "B",
            CartanType::C(_) => "C",
            CartanType::D(_) => "D",
            CartanType::E6 => "E6",
            CartanType::E7 => "E7",
        }
    }

    /// Edges of the Dynkin diagram as 1-based node pairs.
    fn edges(self) -> Vec<(usize, usize)> {
        let chain = |n: usize| (1..n).map(|i| (i, i + 1)).collect::<Vec<_>>();
        match self {
            CartanType::A(n) | CartanType::B(n) | CartanType::C(n) => chain(n),
            CartanType::D(n) => {
                let mut e = chain(n - 1);
                e.push((n - 2, n));
                e
            }
            CartanType::E6 => vec![(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)],
            CartanType::E7 => vec![(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (2, 4)],
        }
    }

    /// The Cartan matrix with entries `a[i][j] = <alpha_i^vee, alpha_j>`.
    pub fn cartan_matrix(self) -> Vec<Vec<i64>> {
        let n = self.rank();
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        for (i, j) in self.edges() {
            a[i - 1][j - 1] = -1;
            a[j - 1][i - 1] = -1;
        }
        // Double bond between nodes n-1 and n.
        match self {
            CartanType::B(n) => a[n - 1][n - 2] = -2, // alpha_n short
            CartanType::C(n) => a[n - 2][n - 1] = -2, // alpha_n long
            _ => {}
        }
        a
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CartanType::E6 | CartanType::E7 => write!(f, "{}", self.label()),
            _ => write!(f, "{}{}", self.label(), self.rank()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CartanDatum {
    pub cartan_type: CartanType,
    pub rank: usize,
    pub cartan_matrix: Vec<Vec<i64>>,
}

/// A root in the simple-root basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Root(pub Vec<i64>);

impl Root {
    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn is_negative(&self) -> bool {
        self.0.iter().all(|&c| c <= 0) && self.0.iter().any(|&c| c < 0)
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn negated(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "{}", if c > 0 { "+" } else { "-" })?;
            } else if c < 0 {
                write!(f, "-")?;
            }
            first = false;
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            write!(f, "a{}", i + 1)?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// An immutable root system. Positive roots are sorted by height, then
/// lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    pub datum: CartanDatum,
    pub positive_roots: Vec<Root>,
    pub highest_root: Root,
    root_set: HashSet<Vec<i64>>,
}

pub fn build_root_system(type_label: &str, rank: usize) -> Result<RootSystem> {
    Ok(RootSystem::new(CartanType::new(type_label, rank)?))
}

impl RootSystem {
    pub fn new(cartan_type: CartanType) -> Self {
        let rank = cartan_type.rank();
        let datum = CartanDatum {
            cartan_type,
            rank,
            cartan_matrix: cartan_type.cartan_matrix(),
        };

        // Breadth-first closure of the simple roots under simple reflections.
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut queue = VecDeque::new();
        for i in 0..rank {
            let mut e = vec![0; rank];
            e[i] = 1;
            seen.insert(e.clone());
            queue.push_back(e);
        }
        while let Some(beta) = queue.pop_front() {
            for i in 0..rank {
                let image = reflect_raw(&datum.cartan_matrix, i, &beta);
                if image.iter().all(|&c| c >= 0) && seen.insert(image.clone()) {
                    queue.push_back(image);
                }
            }
        }

        let mut positive_roots: Vec<Root> = seen.into_iter().map(Root).collect();
        positive_roots.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.cmp(b)));
        let highest_root = positive_roots
            .last()
            .cloned()
            .expect("root system has at least one root");

        let mut root_set = HashSet::with_capacity(2 * positive_roots.len());
        for r in &positive_roots {
            root_set.insert(r.0.clone());
            root_set.insert(r.negated().0);
        }

        RootSystem {
            datum,
            positive_roots,
            highest_root,
            root_set,
        }
    }

    pub fn cartan_type(&self) -> CartanType {
        self.datum.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.datum.rank
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.datum.cartan_matrix
    }

    pub fn is_root(&self, v: &[i64]) -> bool {
        self.root_set.contains(v)
    }

    pub fn check_node(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.rank() {
            Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank(),
            })
        } else {
            Ok(())
        }
    }

    /// Simple reflection `s_i(v) = v - <v, alpha_i^vee> alpha_i` on the root
    /// lattice.
    pub fn reflect(&self, i: usize, v: &[i64]) -> Result<Vec<i64>> {
        self.check_node(i)?;
        if v.len() != self.rank() {
            return Err(Error::Config(format!(
                "vector of length {} for rank {}",
                v.len(),
                self.rank()
            )));
        }
        Ok(reflect_raw(&self.datum.cartan_matrix, i - 1, v))
    }

    /// Simple reflection on the weight lattice (fundamental-weight basis).
    pub fn reflect_weight(&self, i: usize, weight: &[i64]) -> Result<Vec<i64>> {
        self.check_node(i)?;
        let a = &self.datum.cartan_matrix;
        let k = weight[i - 1];
        // alpha_i has coordinates a[.][i-1] in the fundamental-weight basis.
        Ok(weight
            .iter()
            .enumerate()
            .map(|(j, &w)| w - k * a[j][i - 1])
            .collect())
    }

    /// Nodes whose coefficient in the highest root equals one.
    pub fn cominuscule_nodes(&self) -> BTreeSet<usize> {
        self.highest_root
            .0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c == 1)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Number of positive roots supported on the given node subset.
    pub fn positive_roots_supported_on(&self, subset: &BTreeSet<usize>) -> usize {
        self.positive_roots
            .iter()
            .filter(|r| {
                r.0.iter()
                    .enumerate()
                    .all(|(i, &c)| c == 0 || subset.contains(&(i + 1)))
            })
            .count()
    }
}

pub fn cominuscule_nodes(rs: &RootSystem) -> BTreeSet<usize> {
    rs.cominuscule_nodes()
}

fn reflect_raw(a: &[Vec<i64>], i: usize, v: &[i64]) -> Vec<i64> {
    let pairing: i64 = a[i].iter().zip(v).map(|(x, y)| x * y).sum();
    let mut out = v.to_vec();
    out[i] -= pairing;
    out
}
