//! Permutation groups, converted to Cayley form by breadth-first closure.
//!
//! Permutations are image arrays: `p[i]` is where `p` sends `i`. Products act
//! left to right, so `(p * q)[i] = q[p[i]]`.

use std::collections::HashMap;

use crate::error::{GroupError, Result};
use crate::group::FiniteGroup;

pub type Permutation = Vec<usize>;

pub fn is_permutation(p: &[usize], degree: usize) -> bool {
    if p.len() != degree {
        return false;
    }
    let mut hit = vec![false; degree];
    for &x in p {
        if x >= degree || hit[x] {
            return false;
        }
        hit[x] = true;
    }
    true
}

/// `p` then `q`.
pub fn compose(p: &[usize], q: &[usize]) -> Permutation {
    p.iter().map(|&x| q[x]).collect()
}

/// Disjoint-cycle notation, fixed points omitted; the identity is `()`.
pub fn cycle_string(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        out.push('(');
        let mut x = start;
        let mut first = true;
        while !seen[x] {
            seen[x] = true;
            if !first {
                out.push(' ');
            }
            out.push_str(&x.to_string());
            first = false;
            x = p[x];
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

/// Parses disjoint-cycle notation such as `(0 1 2)(3 4)` over `[0, degree)`.
/// Commas may separate points. Cycles need not be disjoint; they are
/// composed left to right.
pub fn parse_cycles(text: &str, degree: usize) -> std::result::Result<Permutation, String> {
    let mut perm: Permutation = (0..degree).collect();
    let mut rest = text.trim();
    if rest.is_empty() {
        return Err("empty generator".into());
    }
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .ok_or_else(|| format!("expected '(' at {rest:?}"))?;
        let close = body.find(')').ok_or("unclosed cycle")?;
        let points = body[..close]
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|s| !s.is_empty())
            .map(|s| {
                s.parse::<usize>()
                    .map_err(|_| format!("bad point {s:?}"))
                    .and_then(|v| {
                        if v < degree {
                            Ok(v)
                        } else {
                            Err(format!("point {v} outside degree {degree}"))
                        }
                    })
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        let mut cycle: Permutation = (0..degree).collect();
        for (k, &p) in points.iter().enumerate() {
            let next = points[(k + 1) % points.len()];
            if cycle[p] != p {
                return Err(format!("point {p} repeated within a cycle"));
            }
            cycle[p] = next;
        }
        if !is_permutation(&cycle, degree) {
            return Err(format!("point repeated within cycle {:?}", &body[..close]));
        }
        perm = compose(&perm, &cycle);
        rest = body[close + 1..].trim_start();
    }
    Ok(perm)
}

/// Closes `generators` under composition. Elements are indexed in discovery
/// order with the identity first; labels are cycle strings.
pub fn from_permutation_generators(
    degree: usize,
    generators: &[Permutation],
    cap: usize,
) -> Result<FiniteGroup> {
    for (index, g) in generators.iter().enumerate() {
        if !is_permutation(g, degree) {
            return Err(GroupError::NotAPermutation { index, degree });
        }
    }
    let identity: Permutation = (0..degree).collect();
    let mut elements = vec![identity.clone()];
    let mut index: HashMap<Permutation, usize> = HashMap::from([(identity, 0)]);
    // parent[j] = (k, g): element j = element k * generator g
    let mut parent: Vec<Option<(usize, usize)>> = vec![None];
    let mut right: Vec<Vec<usize>> = Vec::new();
    let mut head = 0;
    while head < elements.len() {
        let mut row = Vec::with_capacity(generators.len());
        for (gi, g) in generators.iter().enumerate() {
            let p = compose(&elements[head], g);
            let id = match index.get(&p) {
                Some(&id) => id,
                None => {
                    let id = elements.len();
                    if id + 1 > cap {
                        return Err(GroupError::OrderCapExceeded { order: id + 1, cap });
                    }
                    index.insert(p.clone(), id);
                    elements.push(p);
                    parent.push(Some((head, gi)));
                    id
                }
            };
            row.push(id);
        }
        right.push(row);
        head += 1;
    }
    let n = elements.len();
    // table[i][j] = right[table[i][k]][g] where j = k * g
    let mut rows = vec![vec![0usize; n]; n];
    for (i, row) in rows.iter_mut().enumerate() {
        row[0] = i;
        for j in 1..n {
            let (k, g) = parent[j].expect("non-identity elements have a parent");
            row[j] = right[row[k]][g];
        }
    }
    let labels = elements.iter().map(|p| cycle_string(p)).collect();
    Ok(FiniteGroup::from_product_fn(n, labels, |i, j| rows[i][j]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::DEFAULT_ORDER_CAP;

    /// Naive closure: keep multiplying every pair until nothing new appears.
    fn brute_force_order(degree: usize, gens: &[Permutation]) -> usize {
        let mut set: std::collections::BTreeSet<Permutation> =
            std::iter::once((0..degree).collect()).collect();
        set.extend(gens.iter().cloned());
        loop {
            let current: Vec<_> = set.iter().cloned().collect();
            let before = set.len();
            for a in &current {
                for b in &current {
                    set.insert(compose(a, b));
                }
            }
            if set.len() == before {
                return set.len();
            }
        }
    }

    #[test]
    fn s3_from_transposition_and_three_cycle() {
        let gens = vec![
            parse_cycles("(0 1)", 3).unwrap(),
            parse_cycles("(0 1 2)", 3).unwrap(),
        ];
        let g = from_permutation_generators(3, &gens, DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.identity(), 0);
        assert_eq!(g.label(0), "()");
    }

    #[test]
    fn trivial_group_from_no_generators() {
        let g = from_permutation_generators(1, &[], DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn square_symmetries_match_brute_force_closure() {
        let gens = vec![
            parse_cycles("(0 1 2 3)", 4).unwrap(),
            parse_cycles("(1 3)", 4).unwrap(),
        ];
        let expected = brute_force_order(4, &gens);
        assert_eq!(expected, 8);
        let g = from_permutation_generators(4, &gens, DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(g.order(), expected);
        // table agrees with direct composition of the labelled permutations
        let perms: Vec<Permutation> = g
            .labels()
            .iter()
            .map(|l| parse_cycles(l, 4).unwrap())
            .collect();
        for i in 0..8 {
            for j in 0..8 {
                assert_eq!(perms[g.mul(i, j)], compose(&perms[i], &perms[j]));
            }
        }
    }

    #[test]
    fn cap_is_enforced() {
        let gens = vec![
            parse_cycles("(0 1)", 5).unwrap(),
            parse_cycles("(0 1 2 3 4)", 5).unwrap(),
        ];
        let err = from_permutation_generators(5, &gens, 100).unwrap_err();
        assert!(matches!(err, GroupError::OrderCapExceeded { cap: 100, .. }));
    }

    #[test]
    fn rejects_non_permutation() {
        let err = from_permutation_generators(3, &[vec![0, 0, 1]], 10).unwrap_err();
        assert_eq!(
            err,
            GroupError::NotAPermutation {
                index: 0,
                degree: 3
            }
        );
    }

    #[test]
    fn cycle_notation_round_trip() {
        let p = parse_cycles("(0 1 2)(3 4)", 6).unwrap();
        assert_eq!(p, vec![1, 2, 0, 4, 3, 5]);
        assert_eq!(cycle_string(&p), "(0 1 2)(3 4)");
        assert_eq!(parse_cycles("()", 3).unwrap(), vec![0, 1, 2]);
        assert!(parse_cycles("(0 5)", 3).is_err());
        assert!(parse_cycles("(0 1 0)", 3).is_err());
        assert!(parse_cycles("0 1", 3).is_err());
    }
}
