//! Character tables by the Burnside-Dixon class-algebra method.
//!
//! The class matrices are simultaneously diagonalized over a prime field
//! F_p with p = 1 (mod exponent) and p > |G|; the central character
//! eigenvectors determine the irreducible degrees and character values
//! mod p, which lift exactly to cyclotomic integers by discrete Fourier
//! inversion over the eigenvalue multiplicities.

use std::sync::Arc;

use crate::cyclo::Cyclotomic;
use crate::error::{Error, Result};
use crate::group::MatrixGroup;

struct ModP {
    p: u64,
}

impl ModP {
    fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b % self.p) % self.p
    }
    fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }
    fn pow(&self, mut b: u64, mut e: u64) -> u64 {
        let mut acc = 1u64;
        b %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        acc
    }
    fn inv(&self, a: u64) -> u64 {
        self.pow(a, self.p - 2)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn find_splitting_prime(exponent: u64, group_order: u64) -> Result<u64> {
    let mut k = 1;
    loop {
        let p = k * exponent + 1;
        if p > group_order && is_prime(p) {
            return Ok(p);
        }
        k += 1;
        if k > 100_000 {
            return Err(Error::NoSplittingPrime {
                exponent,
                bound: 100_000 * exponent,
            });
        }
    }
}

fn primitive_root(p: u64) -> u64 {
    let mut factors = Vec::new();
    let mut m = p - 1;
    let mut d = 2;
    while d * d <= m {
        if m % d == 0 {
            factors.push(d);
            while m % d == 0 {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        factors.push(m);
    }
    let f = ModP { p };
    'outer: for g in 2..p {
        for &q in &factors {
            if f.pow(g, (p - 1) / q) == 1 {
                continue 'outer;
            }
        }
        return g;
    }
    unreachable!("every prime has a primitive root")
}

/// Reduced row echelon form over F_p; returns pivot columns.
fn modp_rref(m: &mut Vec<Vec<u64>>, p: u64) -> Vec<usize> {
    let f = ModP { p };
    let rows = m.len();
    if rows == 0 {
        return vec![];
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut lead = 0;
    for col in 0..cols {
        let Some(pr) = (lead..rows).find(|&r| m[r][col] % p != 0) else {
            continue;
        };
        m.swap(lead, pr);
        let inv = f.inv(m[lead][col]);
        for c in 0..cols {
            m[lead][c] = f.mul(m[lead][c], inv);
        }
        for r in 0..rows {
            if r != lead && m[r][col] % p != 0 {
                let factor = m[r][col];
                for c in 0..cols {
                    let s = f.mul(factor, m[lead][c]);
                    m[r][c] = f.sub(m[r][c], s);
                }
            }
        }
        pivots.push(col);
        lead += 1;
        if lead == rows {
            break;
        }
    }
    pivots
}

/// Kernel basis of a square matrix over F_p.
fn modp_kernel(mat: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let f = ModP { p };
    let n = mat.len();
    let mut m: Vec<Vec<u64>> = mat.to_vec();
    let pivots = modp_rref(&mut m, p);
    let mut free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.sort_unstable();
    let mut basis = Vec::new();
    for &fc in &free {
        let mut v = vec![0u64; n];
        v[fc] = 1;
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = f.sub(0, m[row][fc]);
        }
        basis.push(v);
    }
    basis
}

/// One row of the output: irreducible degree plus the character value at
/// each conjugacy class, exact, at the conductor of the group exponent.
pub struct DixonRow {
    pub dim: usize,
    pub values: Vec<Cyclotomic>,
}

pub fn character_rows(group: &Arc<MatrixGroup>) -> Result<Vec<DixonRow>> {
    let cls = group.conjugacy_classes();
    let r = cls.reps.len();
    let n = group.order() as u64;
    let e = group.exponent();
    let p = find_splitting_prime(e, n)?;
    let f = ModP { p };

    // class of the inverse of each class representative
    let inv_class: Vec<usize> = (0..r)
        .map(|j| cls.class_of[group.inv_index(cls.reps[j])])
        .collect();

    // class matrices: m_i[j][k] = #{(x, y) in C_i x C_j : x y = rep_k}
    let mut class_mats: Vec<Vec<Vec<u64>>> = vec![vec![vec![0u64; r]; r]; r];
    for i in 0..r {
        for &x in &cls.members[i] {
            let xinv = group.inv_index(x);
            for k in 0..r {
                let y = group.mul_index(xinv, cls.reps[k]);
                let j = cls.class_of[y];
                class_mats[i][j][k] += 1;
            }
        }
    }

    // simultaneous eigenspace refinement
    let mut spaces: Vec<Vec<Vec<u64>>> = vec![(0..r)
        .map(|i| {
            let mut v = vec![0u64; r];
            v[i] = 1;
            v
        })
        .collect()];
    for mat in class_mats.iter().skip(1) {
        let mut next = Vec::new();
        for space in &spaces {
            let k = space.len();
            if k == 1 {
                next.push(space.clone());
                continue;
            }
            // restriction T of the class matrix to the invariant subspace
            let apply = |v: &[u64]| -> Vec<u64> {
                (0..r)
                    .map(|j| {
                        let mut acc = 0u64;
                        for kk in 0..r {
                            if v[kk] != 0 && mat[j][kk] != 0 {
                                acc = f.add(acc, f.mul(mat[j][kk], v[kk]));
                            }
                        }
                        acc
                    })
                    .collect()
            };
            let images: Vec<Vec<u64>> = space.iter().map(|v| apply(v)).collect();
            // solve images_t = sum_s T[s][t] * basis_s via one rref of the
            // transposed basis with all image columns appended
            let mut aug: Vec<Vec<u64>> = (0..r)
                .map(|row| {
                    let mut line: Vec<u64> = (0..k).map(|s| space[s][row]).collect();
                    line.extend((0..k).map(|t| images[t][row]));
                    line
                })
                .collect();
            let pivots = modp_rref(&mut aug, p);
            debug_assert_eq!(pivots.len(), k, "basis rows are independent");
            let mut t = vec![vec![0u64; k]; k];
            for (row, &pc) in pivots.iter().enumerate() {
                debug_assert!(pc < k);
                for tt in 0..k {
                    t[pc][tt] = aug[row][k + tt];
                }
            }
            // split by eigenvalues
            let mut found = 0usize;
            for lambda in 0..p {
                if found == k {
                    break;
                }
                let mut shifted = t.clone();
                for d in 0..k {
                    shifted[d][d] = f.sub(shifted[d][d], lambda);
                }
                let ker = modp_kernel(&shifted, p);
                if ker.is_empty() {
                    continue;
                }
                found += ker.len();
                let sub: Vec<Vec<u64>> = ker
                    .iter()
                    .map(|coords| {
                        let mut v = vec![0u64; r];
                        for (s, &cc) in coords.iter().enumerate() {
                            if cc != 0 {
                                for col in 0..r {
                                    v[col] = f.add(v[col], f.mul(cc, space[s][col]));
                                }
                            }
                        }
                        v
                    })
                    .collect();
                next.push(sub);
            }
            debug_assert_eq!(found, k, "eigenvalues must exhaust the space");
        }
        spaces = next;
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
    }
    assert!(
        spaces.iter().all(|s| s.len() == 1) && spaces.len() == r,
        "class matrices must have simple joint spectrum"
    );

    // normalize central characters: omega at the identity class is 1
    let omegas: Vec<Vec<u64>> = spaces
        .iter()
        .map(|s| {
            let w = &s[0];
            assert!(w[0] % p != 0, "central character vanishes at identity");
            let inv = f.inv(w[0]);
            w.iter().map(|&x| f.mul(x, inv)).collect()
        })
        .collect();

    // degrees from the second orthogonality relation
    let sqrt_n = (1..=n).take_while(|d| d * d <= n).last().unwrap_or(1);
    let lam = {
        let g = primitive_root(p);
        f.pow(g, (p - 1) / e)
    };
    let mut rows = Vec::with_capacity(r);
    for w in &omegas {
        let mut s = 0u64;
        for j in 0..r {
            let term = f.mul(f.mul(w[j], w[inv_class[j]]), f.inv(cls.sizes[j] as u64));
            s = f.add(s, term);
        }
        let d2 = f.mul(n % p, f.inv(s));
        let dim = (1..=sqrt_n)
            .find(|&d| f.mul(d, d) == d2)
            .expect("irreducible degree recovers uniquely mod p");
        // character values mod p
        let chi_mod: Vec<u64> = (0..r)
            .map(|j| f.mul(f.mul(dim, w[j]), f.inv(cls.sizes[j] as u64)))
            .collect();
        // exact lift class by class via eigenvalue multiplicities
        let mut values = Vec::with_capacity(r);
        for j in 0..r {
            let m = group.element_order(cls.reps[j]) as u64;
            let lam_m = f.pow(lam, e / m);
            let minv = f.inv(m % p);
            let mut value = Cyclotomic::zero(e as u32);
            for k in 0..m {
                let mut acc = 0u64;
                for step in 0..m {
                    let cl = group.class_power(j, step as usize);
                    let phase = f.pow(lam_m, (m - (k * step) % m) % m);
                    acc = f.add(acc, f.mul(chi_mod[cl], phase));
                }
                let mult = f.mul(minv, acc);
                assert!(mult <= dim, "eigenvalue multiplicity exceeds degree");
                if mult != 0 {
                    let root =
                        Cyclotomic::root_of_unity((k as i64) * (e as i64 / m as i64), e as u32);
                    value = value.add(&root.scale(&crate::cyclo::Rat::from_integer(
                        (mult as i64).into(),
                    )));
                }
            }
            values.push(value);
        }
        rows.push(DixonRow {
            dim: dim as usize,
            values,
        });
    }

    // sum of squares sanity check
    let total: usize = rows.iter().map(|row| row.dim * row.dim).sum();
    assert_eq!(total, n as usize, "sum of squared degrees equals |G|");
    Ok(rows)
}
