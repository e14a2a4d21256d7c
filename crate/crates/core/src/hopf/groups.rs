//! Finite groups as Cayley tables, with the builtins used by the fixture
//! library (cyclic, dihedral, symmetric up to S4).

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupData {
    pub order: usize,
    /// table[i][j] = index of g_i * g_j
    pub table: Vec<Vec<usize>>,
    pub names: Vec<String>,
    pub identity: usize,
    pub abelian: bool,
}

impl GroupData {
    /// Validate a Cayley table: associativity, two-sided identity, inverses.
    pub fn from_table(table: Vec<Vec<usize>>, names: Option<Vec<String>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidInput("empty Cayley table".into()));
        }
        for row in &table {
            if row.len() != n || row.iter().any(|&x| x >= n) {
                return Err(Error::InvalidInput("Cayley table is not square over 0..n".into()));
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| Error::InvalidInput("Cayley table has no identity".into()))?;
        for x in 0..n {
            if !(0..n).any(|y| table[x][y] == identity && table[y][x] == identity) {
                return Err(Error::InvalidInput(format!("element {x} has no inverse")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::InvalidInput(format!(
                            "Cayley table is not associative at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        let abelian = (0..n).all(|a| (0..n).all(|b| table[a][b] == table[b][a]));
        let names = names.unwrap_or_else(|| (0..n).map(|i| format!("g{i}")).collect());
        if names.len() != n {
            return Err(Error::InvalidInput("name list length mismatch".into()));
        }
        Ok(GroupData { order: n, table, names, identity, abelian })
    }

    pub fn cyclic(n: usize) -> Result<Self> {
        check_order(n)?;
        let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        let names = (0..n)
            .map(|i| match i {
                0 => "e".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{i}"),
            })
            .collect();
        GroupData::from_table(table, Some(names))
    }

    /// Dihedral group of order 2n: elements r^i s^j with s r = r^{-1} s.
    pub fn dihedral(n: usize) -> Result<Self> {
        check_order(2 * n)?;
        if n < 1 {
            return Err(Error::InvalidInput("dihedral parameter must be >= 1".into()));
        }
        let idx = |i: usize, j: usize| j * n + i;
        let mut table = vec![vec![0; 2 * n]; 2 * n];
        for i1 in 0..n {
            for j1 in 0..2 {
                for i2 in 0..n {
                    for j2 in 0..2 {
                        // r^{i1} s^{j1} r^{i2} s^{j2} = r^{i1 + (-1)^{j1} i2} s^{j1+j2}
                        let i = if j1 == 0 { (i1 + i2) % n } else { (i1 + n - i2 % n) % n };
                        let j = (j1 + j2) % 2;
                        table[idx(i1, j1)][idx(i2, j2)] = idx(i, j);
                    }
                }
            }
        }
        let mut names = Vec::new();
        for j in 0..2 {
            for i in 0..n {
                names.push(match (i, j) {
                    (0, 0) => "e".into(),
                    (1, 0) => "r".into(),
                    (_, 0) => format!("r^{i}"),
                    (0, _) => "s".into(),
                    (1, _) => "r*s".into(),
                    (_, _) => format!("r^{i}*s"),
                });
            }
        }
        GroupData::from_table(table, Some(names))
    }

    /// Symmetric group on m letters (m <= 4), permutations in lexicographic
    /// one-line order, composition (στ)(x) = σ(τ(x)).
    pub fn symmetric(m: usize) -> Result<Self> {
        if m == 0 || m > 4 {
            return Err(Error::InvalidInput("symmetric groups are built in only up to S4".into()));
        }
        let perms = permutations(m);
        let n = perms.len();
        check_order(n)?;
        let index_of = |p: &Vec<usize>| perms.iter().position(|q| q == p).unwrap();
        let mut table = vec![vec![0; n]; n];
        for (i, s) in perms.iter().enumerate() {
            for (j, t) in perms.iter().enumerate() {
                let comp: Vec<usize> = (0..m).map(|x| s[t[x]]).collect();
                table[i][j] = index_of(&comp);
            }
        }
        let names = perms.iter().map(|p| cycle_name(p)).collect();
        GroupData::from_table(table, Some(names))
    }

    pub fn inverse(&self, x: usize) -> usize {
        (0..self.order).find(|&y| self.table[x][y] == self.identity).unwrap()
    }

    pub fn element_order(&self, x: usize) -> u64 {
        let mut acc = x;
        let mut k = 1u64;
        while acc != self.identity {
            acc = self.table[acc][x];
            k += 1;
        }
        k
    }

    /// Exponent: lcm of all element orders.
    pub fn exponent(&self) -> u64 {
        (0..self.order).fold(1u64, |acc, x| num::integer::lcm(acc, self.element_order(x)))
    }

    /// Indices generated by a subset (closure under multiplication).
    pub fn generated_subgroup(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order];
        seen[self.identity] = true;
        let mut stack = vec![self.identity];
        while let Some(x) = stack.pop() {
            for &g in gens {
                let y = self.table[x][g];
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        (0..self.order).filter(|&i| seen[i]).collect()
    }

    pub fn is_normal(&self, subgroup: &[usize]) -> bool {
        let in_sub = |x: usize| subgroup.contains(&x);
        (0..self.order).all(|g| {
            subgroup.iter().all(|&h| {
                let ginv = self.inverse(g);
                in_sub(self.table[self.table[g][h]][ginv])
            })
        })
    }

    /// Quotient by a normal subgroup: returns (quotient group, coset index
    /// per element). Cosets are ordered by their minimal element index.
    pub fn quotient(&self, normal: &[usize]) -> Result<(GroupData, Vec<usize>)> {
        if !self.is_normal(normal) {
            return Err(Error::InvalidInput("subgroup is not normal".into()));
        }
        let mut coset_of = vec![usize::MAX; self.order];
        let mut reps: Vec<usize> = Vec::new();
        for x in 0..self.order {
            if coset_of[x] != usize::MAX {
                continue;
            }
            let c = reps.len();
            for &h in normal {
                coset_of[self.table[x][h]] = c;
            }
            reps.push(x);
        }
        let q = reps.len();
        let mut table = vec![vec![0; q]; q];
        for (i, &a) in reps.iter().enumerate() {
            for (j, &b) in reps.iter().enumerate() {
                table[i][j] = coset_of[self.table[a][b]];
            }
        }
        let names = reps.iter().map(|&r| format!("[{}]", self.names[r])).collect();
        let group = GroupData::from_table(table, Some(names))?;
        Ok((group, coset_of))
    }
}

fn check_order(n: usize) -> Result<()> {
    // the double has dimension |G|^2; beyond 24 resolutions leave desk scale
    if n > 24 {
        return Err(Error::Ceiling(format!("builtin groups are limited to order 24, got {n}")));
    }
    Ok(())
}

fn permutations(m: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..m {
        let mut next = Vec::new();
        for p in &out {
            for x in 0..m {
                if !p.contains(&x) {
                    let mut q = p.clone();
                    q.push(x);
                    next.push(q);
                }
            }
        }
        out = next;
    }
    out.sort();
    out
}

/// Cycle-notation name with 1-indexed letters, e.g. `(12)`, `(123)`, `e`.
fn cycle_name(p: &[usize]) -> String {
    let m = p.len();
    let mut seen = vec![false; m];
    let mut out = String::new();
    for start in 0..m {
        if seen[start] || p[start] == start {
            seen[start] = true;
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut x = p[start];
        while x != start {
            seen[x] = true;
            cycle.push(x);
            x = p[x];
        }
        out.push('(');
        for c in cycle {
            out.push_str(&(c + 1).to_string());
        }
        out.push(')');
    }
    if out.is_empty() {
        "e".into()
    } else {
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_four() {
        let g = GroupData::cyclic(4).unwrap();
        assert!(g.abelian);
        assert_eq!(g.element_order(1), 4);
        assert_eq!(g.exponent(), 4);
    }

    #[test]
    fn symmetric_three() {
        let g = GroupData::symmetric(3).unwrap();
        assert_eq!(g.order, 6);
        assert!(!g.abelian);
        // (12) has order 2, (123) order 3
        let t = g.names.iter().position(|n| n == "(12)").unwrap();
        let c = g.names.iter().position(|n| n == "(123)").unwrap();
        assert_eq!(g.element_order(t), 2);
        assert_eq!(g.element_order(c), 3);
        let a3 = g.generated_subgroup(&[c]);
        assert_eq!(a3.len(), 3);
        assert!(g.is_normal(&a3));
        let t_sub = g.generated_subgroup(&[t]);
        assert!(!g.is_normal(&t_sub));
    }

    #[test]
    fn dihedral_three_is_s3_sized() {
        let g = GroupData::dihedral(3).unwrap();
        assert_eq!(g.order, 6);
        assert!(!g.abelian);
        assert_eq!(g.exponent(), 6);
    }

    #[test]
    fn quotient_of_z6_by_z2() {
        let g = GroupData::cyclic(6).unwrap();
        let sub = g.generated_subgroup(&[3]); // h^3 has order 2
        assert_eq!(sub.len(), 2);
        let (q, coset) = g.quotient(&sub).unwrap();
        assert_eq!(q.order, 3);
        assert_eq!(coset[0], coset[3]);
        assert_eq!(q.element_order(coset[1]), 3);
    }

    #[test]
    fn bad_tables_rejected() {
        // constant table: no identity
        assert!(GroupData::from_table(vec![vec![0, 0], vec![0, 0]], None).is_err());
        // swapped row breaks associativity/identity
        assert!(GroupData::from_table(vec![vec![0, 1], vec![1, 1]], None).is_err());
    }

    #[test]
    fn order_ceiling() {
        assert!(GroupData::cyclic(25).is_err());
    }
}
