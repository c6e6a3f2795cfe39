//! Named group families and the standard verification corpus.
//!
//! Dihedral groups follow the polygon convention: `D_n` is the symmetry group
//! of the regular `n`-gon and has order `2n`.

use std::fmt;

use crate::error::{GroupError, Result};
use crate::group::{FiniteGroup, DEFAULT_ORDER_CAP};

/// A buildable group family with its parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Cyclic(usize),
    Dihedral(usize),
    Symmetric(usize),
    /// Generalized quaternion (dicyclic 2-group) of the given order.
    Quaternion(usize),
    ElementaryAbelian {
        prime: usize,
        rank: usize,
    },
    Product(Vec<FamilySpec>),
}

/// CLI-facing family names.
pub const FAMILY_NAMES: [&str; 6] = [
    "cyclic",
    "dihedral",
    "symmetric",
    "quaternion",
    "product",
    "elemabelian",
];

impl FamilySpec {
    /// Parses a family name and its integer parameters. Products take factor
    /// specs of the form `family:p1,p2` instead of integers.
    pub fn parse(family: &str, params: &[String]) -> Result<Self> {
        let ints = || -> Result<Vec<usize>> {
            params
                .iter()
                .map(|p| {
                    p.parse::<usize>()
                        .map_err(|_| GroupError::BadParameter(format!("not an integer: {p:?}")))
                })
                .collect()
        };
        let one = |name: &str| -> Result<usize> {
            match ints()?.as_slice() {
                [n] => Ok(*n),
                _ => Err(GroupError::BadParameter(format!(
                    "{name} takes exactly one integer parameter"
                ))),
            }
        };
        match family {
            "cyclic" => Ok(FamilySpec::Cyclic(one(family)?)),
            "dihedral" => Ok(FamilySpec::Dihedral(one(family)?)),
            "symmetric" => Ok(FamilySpec::Symmetric(one(family)?)),
            "quaternion" => Ok(FamilySpec::Quaternion(one(family)?)),
            "elemabelian" => match ints()?.as_slice() {
                [prime, rank] => Ok(FamilySpec::ElementaryAbelian {
                    prime: *prime,
                    rank: *rank,
                }),
                _ => Err(GroupError::BadParameter(
                    "elemabelian takes a prime and a rank".into(),
                )),
            },
            "product" => {
                if params.len() < 2 {
                    return Err(GroupError::BadParameter(
                        "product takes at least two factors like dihedral:4 cyclic:2".into(),
                    ));
                }
                params
                    .iter()
                    .map(|f| {
                        let (name, rest) = f.split_once(':').ok_or_else(|| {
                            GroupError::BadParameter(format!("factor {f:?} is not family:params"))
                        })?;
                        let sub: Vec<String> = rest
                            .split(',')
                            .filter(|s| !s.is_empty())
                            .map(str::to_string)
                            .collect();
                        FamilySpec::parse(name, &sub)
                    })
                    .collect::<Result<Vec<_>>>()
                    .map(FamilySpec::Product)
            }
            other => Err(GroupError::BadParameter(format!(
                "unknown family {other:?}; expected one of {}",
                FAMILY_NAMES.join(", ")
            ))),
        }
    }

    /// Order of the group this spec describes, validating parameters.
    pub fn order(&self) -> Result<usize> {
        let checked =
            |v: Option<usize>| v.ok_or_else(|| GroupError::BadParameter("order overflows".into()));
        match self {
            FamilySpec::Cyclic(n) | FamilySpec::Symmetric(n) | FamilySpec::Dihedral(n)
                if *n == 0 =>
            {
                Err(GroupError::BadParameter(format!(
                    "{self}: parameter must be positive"
                )))
            }
            FamilySpec::Cyclic(n) => Ok(*n),
            FamilySpec::Dihedral(n) => checked(n.checked_mul(2)),
            FamilySpec::Symmetric(n) => checked((1..=*n).try_fold(1usize, |a, k| a.checked_mul(k))),
            FamilySpec::Quaternion(n) => {
                if *n >= 8 && n.is_power_of_two() {
                    Ok(*n)
                } else {
                    Err(GroupError::BadParameter(format!(
                        "generalized quaternion order must be a power of two >= 8, got {n}"
                    )))
                }
            }
            FamilySpec::ElementaryAbelian { prime, rank } => {
                if !is_prime(*prime) || *rank == 0 {
                    return Err(GroupError::BadParameter(format!(
                        "elementary abelian needs a prime and a positive rank, got {prime}^{rank}"
                    )));
                }
                checked(prime.checked_pow(*rank as u32))
            }
            FamilySpec::Product(factors) => {
                if factors.is_empty() {
                    return Err(GroupError::BadParameter("empty product".into()));
                }
                factors
                    .iter()
                    .try_fold(1usize, |acc, f| checked(acc.checked_mul(f.order()?)))
            }
        }
    }

    /// Builds the group, refusing anything whose order exceeds `cap`.
    pub fn build(&self, cap: usize) -> Result<FiniteGroup> {
        let order = self.order()?;
        if order > cap {
            return Err(GroupError::OrderCapExceeded { order, cap });
        }
        Ok(match self {
            FamilySpec::Cyclic(n) => cyclic_group(*n),
            FamilySpec::Dihedral(n) => dihedral_group(*n),
            FamilySpec::Symmetric(n) => symmetric_group(*n),
            FamilySpec::Quaternion(n) => quaternion_group(*n),
            FamilySpec::ElementaryAbelian { prime, rank } => {
                let base = cyclic_group(*prime);
                let mut g = base.clone();
                for _ in 1..*rank {
                    g = product_group(&g, &base);
                }
                let labels = (0..g.order()).map(|i| digits(i, *prime, *rank)).collect();
                g.with_labels(labels)
            }
            FamilySpec::Product(factors) => {
                let mut it = factors.iter();
                let mut g = it.next().expect("non-empty product").build(cap)?;
                for f in it {
                    g = product_group(&g, &f.build(cap)?);
                }
                g
            }
        })
    }

    /// Display name, e.g. `D_8`, `Z_2^3`, `S_3xZ_2`.
    pub fn name(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Cyclic(n) => write!(f, "Z_{n}"),
            FamilySpec::Dihedral(n) => write!(f, "D_{n}"),
            FamilySpec::Symmetric(n) => write!(f, "S_{n}"),
            FamilySpec::Quaternion(n) => write!(f, "Q_{n}"),
            FamilySpec::ElementaryAbelian { prime, rank } => write!(f, "Z_{prime}^{rank}"),
            FamilySpec::Product(factors) => {
                for (i, x) in factors.iter().enumerate() {
                    if i > 0 {
                        f.write_str("x")?;
                    }
                    write!(f, "{x}")?;
                }
                Ok(())
            }
        }
    }
}

fn is_prime(p: usize) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

fn digits(mut i: usize, base: usize, width: usize) -> String {
    let mut out = vec![0; width];
    for slot in out.iter_mut().rev() {
        *slot = i % base;
        i /= base;
    }
    format!(
        "({})",
        out.iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join(",")
    )
}

fn cyclic_group(n: usize) -> FiniteGroup {
    let labels = (0..n)
        .map(|k| match k {
            0 => "1".to_string(),
            1 => "a".to_string(),
            _ => format!("a^{k}"),
        })
        .collect();
    FiniteGroup::from_product_fn(n, labels, |i, j| (i + j) % n)
}

/// `r^k` at index `k`, `s·r^k` at index `n + k`.
fn dihedral_group(n: usize) -> FiniteGroup {
    let labels = (0..2 * n)
        .map(|i| {
            let (refl, k) = (i >= n, i % n);
            match (refl, k) {
                (false, 0) => "1".to_string(),
                (false, 1) => "r".to_string(),
                (false, k) => format!("r^{k}"),
                (true, 0) => "s".to_string(),
                (true, 1) => "s·r".to_string(),
                (true, k) => format!("s·r^{k}"),
            }
        })
        .collect();
    // s^a r^i · s^b r^j = s^(a+b) r^(±i + j), sign negative when b = 1
    FiniteGroup::from_product_fn(2 * n, labels, |x, y| {
        let (a, i) = (x / n, x % n);
        let (b, j) = (y / n, y % n);
        let rot = if b == 1 { (n - i + j) % n } else { (i + j) % n };
        ((a + b) % 2) * n + rot
    })
}

/// All permutations of `n` points in lexicographic order of their image
/// arrays; the identity comes first.
fn symmetric_group(n: usize) -> FiniteGroup {
    let mut perms: Vec<Vec<usize>> = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    loop {
        perms.push(current.clone());
        if !next_permutation(&mut current) {
            break;
        }
    }
    let index = |p: &[usize]| lehmer_rank(p);
    let labels = perms.iter().map(|p| crate::perm::cycle_string(p)).collect();
    FiniteGroup::from_product_fn(perms.len(), labels, |i, j| {
        index(&crate::perm::compose(&perms[i], &perms[j]))
    })
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len())
        .rev()
        .find(|&j| p[j] > p[i - 1])
        .expect("pivot exists");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Lexicographic rank of a permutation.
fn lehmer_rank(p: &[usize]) -> usize {
    let n = p.len();
    let mut rank = 0;
    for i in 0..n {
        let smaller = p[i + 1..].iter().filter(|&&x| x < p[i]).count();
        rank = rank * (n - i) + smaller;
    }
    rank
}

/// `a^i b^j` at index `j·(order/2) + i`, with `a` of order `order/2`,
/// `b² = a^(order/4)` and `b⁻¹ a b = a⁻¹`.
fn quaternion_group(order: usize) -> FiniteGroup {
    let m = order / 2;
    let half = order / 4;
    let labels = (0..order)
        .map(|x| {
            let (j, i) = (x / m, x % m);
            match (j, i) {
                (0, 0) => "1".to_string(),
                (0, 1) => "a".to_string(),
                (0, i) => format!("a^{i}"),
                (_, 0) => "b".to_string(),
                (_, 1) => "a·b".to_string(),
                (_, i) => format!("a^{i}·b"),
            }
        })
        .collect();
    FiniteGroup::from_product_fn(order, labels, |x, y| {
        let (j, i) = (x / m, x % m);
        let (l, k) = (y / m, y % m);
        if j == 0 {
            l * m + (i + k) % m
        } else {
            // a^i b a^k b^l = a^(i-k) b^(1+l)
            let e = (i + m - k) % m;
            if l == 0 {
                m + e
            } else {
                (e + half) % m
            }
        }
    })
}

/// `(i, j) ↦ i·|h| + j`.
fn product_group(g: &FiniteGroup, h: &FiniteGroup) -> FiniteGroup {
    let (gn, hn) = (g.order(), h.order());
    // constructors above always put the identity at 0; keep that true here
    let gi = |k: usize| {
        if k == 0 {
            g.identity()
        } else if k == g.identity() {
            0
        } else {
            k
        }
    };
    let hi = |k: usize| {
        if k == 0 {
            h.identity()
        } else if k == h.identity() {
            0
        } else {
            k
        }
    };
    let labels = (0..gn * hn)
        .map(|x| format!("({},{})", g.label(gi(x / hn)), h.label(hi(x % hn))))
        .collect();
    FiniteGroup::from_product_fn(gn * hn, labels, |x, y| {
        let a = gi(g.mul(gi(x / hn), gi(y / hn)));
        let b = hi(h.mul(hi(x % hn), hi(y % hn)));
        a * hn + b
    })
}

pub fn make_cyclic(n: usize) -> Result<FiniteGroup> {
    FamilySpec::Cyclic(n).build(DEFAULT_ORDER_CAP)
}

/// `D_n` of order `2n`; `r` at index 1, `s` at index `n`.
pub fn make_dihedral(n: usize) -> Result<FiniteGroup> {
    FamilySpec::Dihedral(n).build(DEFAULT_ORDER_CAP)
}

pub fn make_symmetric(n: usize) -> Result<FiniteGroup> {
    FamilySpec::Symmetric(n).build(DEFAULT_ORDER_CAP)
}

pub fn make_generalized_quaternion(order: usize) -> Result<FiniteGroup> {
    FamilySpec::Quaternion(order).build(DEFAULT_ORDER_CAP)
}

pub fn make_elementary_abelian(prime: usize, rank: usize) -> Result<FiniteGroup> {
    FamilySpec::ElementaryAbelian { prime, rank }.build(DEFAULT_ORDER_CAP)
}

pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Result<FiniteGroup> {
    direct_product_capped(g, h, DEFAULT_ORDER_CAP)
}

pub fn direct_product_capped(g: &FiniteGroup, h: &FiniteGroup, cap: usize) -> Result<FiniteGroup> {
    let order = g.order() * h.order();
    if order > cap {
        return Err(GroupError::OrderCapExceeded { order, cap });
    }
    Ok(product_group(g, h))
}

/// A corpus member: display name, the family description that built it, and the group.
#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub spec: FamilySpec,
    pub group: FiniteGroup,
}

/// Specs of the standard corpus, in corpus order:
///
/// 1. cyclic `Z_1 … Z_k`, `k = min(max_order, 64)`;
/// 2. dihedral `D_1 … D_m`, `2m ≤ max_order`;
/// 3. symmetric `S_3, S_4, S_5` while `n! ≤ max_order`;
/// 4. generalized quaternion `Q_8, Q_16, …`;
/// 5. elementary abelian `Z_2^k` then `Z_3^k`, `k ≥ 2`;
/// 6. products `S_3xZ_2`, `D_4xZ_2`, `Q_8xZ_3`, `S_3xS_3`.
///
/// Every family is filtered by `order ≤ max_order`.
pub fn standard_corpus_specs(max_order: usize) -> Vec<FamilySpec> {
    use FamilySpec::*;
    let mut specs = Vec::new();
    specs.extend((1..=max_order.min(64)).map(Cyclic));
    specs.extend((1..=max_order / 2).map(Dihedral));
    specs.extend((3..=5).map(Symmetric));
    specs.extend(
        (3..)
            .map(|k| Quaternion(1 << k))
            .take_while(|q| q.order().unwrap() <= max_order),
    );
    for prime in [2, 3] {
        specs.extend(
            (2..)
                .map(|rank| ElementaryAbelian { prime, rank })
                .take_while(|e| e.order().unwrap() <= max_order),
        );
    }
    specs.extend([
        Product(vec![Symmetric(3), Cyclic(2)]),
        Product(vec![Dihedral(4), Cyclic(2)]),
        Product(vec![Quaternion(8), Cyclic(3)]),
        Product(vec![Symmetric(3), Symmetric(3)]),
    ]);
    specs.retain(|s| s.order().map(|o| o <= max_order).unwrap_or(false));
    specs
}

pub fn standard_corpus(max_order: usize) -> Result<Vec<CorpusEntry>> {
    standard_corpus_specs(max_order)
        .into_iter()
        .map(|spec| {
            let group = spec.build(max_order.max(DEFAULT_ORDER_CAP))?;
            Ok(CorpusEntry {
                name: spec.name(),
                spec,
                group,
            })
        })
        .collect()
}
