//! Meyer's signature cocycle on `Sp(2g, Z)` and the signature of a Lefschetz
//! fibration over the sphere read off its monodromy factorization.
//!
//! For `A, B` let `V = {(x, y) : (A^{-1} - I) x + (B - I) y = 0}` inside
//! `Q^{2g} + Q^{2g}`, with the form
//! `((x1, y1), (x2, y2)) -> <x1 + y1, (I - B) y2>`. Then `tau(A, B)` is the
//! signature of that form on `V`. The form factors through `y2 -> (I - B) y2`,
//! so its rank, and hence `|tau|`, is at most `2g`.

use num_traits::Zero;

use super::linalg::{inertia, nullspace, q, Inertia, Q};
use super::symplectic::{transvection, SympMatrix, TwistWord};
use crate::error::{Error, Result};

/// Global sign applied to the cocycle sum in [`signature_from_word`].
/// Fixed so that the torus word `(t_a t_b)^6` gives `sigma(E(1)) = -8`.
pub const CALIBRATION_SIGN: i64 = 1;

/// Full inertia of the Meyer form for `(A, B)`.
pub fn meyer_inertia(a: &SympMatrix, b: &SympMatrix) -> Result<Inertia> {
    if a.genus() != b.genus() {
        return Err(Error::GenusMismatch(a.genus(), b.genus()));
    }
    let g = a.genus();
    let n = 2 * g;
    let a_inv = a.inverse();

    let system: Vec<Vec<Q>> = (0..n)
        .map(|i| {
            let delta = |j: usize| i64::from(i == j);
            (0..n)
                .map(|j| q(a_inv.get(i, j) - delta(j)))
                .chain((0..n).map(|j| q(b.get(i, j) - delta(j))))
                .collect()
        })
        .collect();
    let basis = nullspace(&system, 2 * n);
    if basis.is_empty() {
        return Ok(Inertia {
            positive: 0,
            negative: 0,
            nullity: 0,
        });
    }

    // K = J (I - B); the form is (x1 + y1)^T K y2.
    let k: Vec<Vec<Q>> = (0..n)
        .map(|i| {
            let (src, sign) = if i < g { (i + g, 1) } else { (i - g, -1) };
            (0..n)
                .map(|j| q(sign * (i64::from(src == j) - b.get(src, j))))
                .collect()
        })
        .collect();

    // For each basis vector: the sum x + y, and K y.
    let sums: Vec<Vec<Q>> = basis
        .iter()
        .map(|v| (0..n).map(|i| &v[i] + &v[n + i]).collect())
        .collect();
    let images: Vec<Vec<Q>> = basis
        .iter()
        .map(|v| {
            k.iter()
                .map(|row| row.iter().zip(&v[n..]).map(|(kij, yj)| kij * yj).sum())
                .collect()
        })
        .collect();
    let dot = |u: &[Q], v: &[Q]| -> Q { u.iter().zip(v).map(|(a, b)| a * b).sum() };

    let dim = basis.len();
    let half = Q::new(1.into(), 2.into());
    let mut gram = vec![vec![Q::zero(); dim]; dim];
    for i in 0..dim {
        for j in i..dim {
            let sym = (dot(&sums[i], &images[j]) + dot(&sums[j], &images[i])) * &half;
            gram[j][i] = sym.clone();
            gram[i][j] = sym;
        }
    }
    Ok(inertia(&gram))
}

/// Meyer's cocycle `tau_g(A, B)`.
pub fn meyer_tau(a: &SympMatrix, b: &SympMatrix) -> Result<i64> {
    meyer_inertia(a, b).map(|i| i.signature())
}

/// Total monodromy of a twist word. `twists[0]` acts first, so the product
/// is `T_s * ... * T_1`.
pub fn word_product(word: &TwistWord) -> Result<SympMatrix> {
    if word.is_empty() {
        return Err(Error::EmptyWord);
    }
    word.twists()
        .iter()
        .try_fold(SympMatrix::identity(word.genus()), |acc, c| {
            transvection(word.genus(), c)?.mul(&acc)
        })
}

/// Signature of the Lefschetz fibration over the sphere with this monodromy
/// factorization: `CALIBRATION_SIGN * sum_j tau(W_j, T_{j+1})` where
/// `W_j = T_j * ... * T_1` are the partial products. Nonseparating singular
/// fibers contribute nothing locally.
pub fn signature_from_word(word: &TwistWord) -> Result<i64> {
    let total = word_product(word)?;
    if !total.is_identity() {
        return Err(Error::NonTrivialMonodromy(total));
    }
    let g = word.genus();
    let mut partial = SympMatrix::identity(g);
    let mut sum = 0;
    for c in word.twists() {
        let t = transvection(g, c)?;
        sum += meyer_tau(&partial, &t)?;
        partial = t.mul(&partial)?;
    }
    Ok(CALIBRATION_SIGN * sum)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ta() -> SympMatrix {
        transvection(1, &[1, 0]).unwrap()
    }

    fn tb() -> SympMatrix {
        transvection(1, &[0, 1]).unwrap()
    }

    #[test]
    fn tau_with_identity_vanishes() {
        let id = SympMatrix::identity(1);
        for b in [ta(), tb(), ta().mul(&tb()).unwrap(), id.clone()] {
            assert_eq!(meyer_tau(&id, &b).unwrap(), 0);
            assert_eq!(meyer_tau(&b, &id).unwrap(), 0);
        }
    }

    #[test]
    fn tau_with_inverse_vanishes() {
        assert_eq!(meyer_tau(&ta(), &ta().inverse()).unwrap(), 0);
        assert_eq!(meyer_tau(&tb(), &tb().inverse()).unwrap(), 0);
    }

    #[test]
    fn tau_genus_mismatch() {
        let r = meyer_tau(&ta(), &SympMatrix::identity(2));
        assert_eq!(r, Err(Error::GenusMismatch(1, 2)));
    }

    #[test]
    fn tau_reaches_sharp_bound() {
        let a = SympMatrix::from_rows(&[vec![1, 1], vec![2, 3]]).unwrap();
        let b = SympMatrix::from_rows(&[vec![2, -3], vec![-1, 2]]).unwrap();
        assert_eq!(meyer_tau(&a, &b).unwrap(), 2);
        let a = SympMatrix::from_rows(&[vec![2, 3], vec![1, 2]]).unwrap();
        let b = SympMatrix::from_rows(&[vec![-1, -1], vec![2, 1]]).unwrap();
        assert_eq!(meyer_tau(&a, &b).unwrap(), -2);

        let gens = [ta(), tb(), ta().inverse(), tb().inverse()];
        for x in &gens {
            for y in &gens {
                let a = x.mul(y).unwrap();
                for b in &gens {
                    let i = meyer_inertia(&a, b).unwrap();
                    assert!(i.rank() <= 2);
                }
            }
        }
    }

    #[test]
    fn torus_word_product_is_identity() {
        let w = TwistWord::torus_calibration(1);
        assert!(word_product(&w).unwrap().is_identity());
    }

    #[test]
    fn single_twist_product() {
        let w = TwistWord::new(1, vec![vec![1, 0]]).unwrap();
        assert_eq!(word_product(&w).unwrap(), ta());
    }

    #[test]
    fn repeated_twist_product() {
        for m in 1..6 {
            let w = TwistWord::new(1, vec![vec![1, 0]; m]).unwrap();
            assert_eq!(
                word_product(&w).unwrap().rows(),
                vec![vec![1, -(m as i64)], vec![0, 1]]
            );
        }
    }

    #[test]
    fn empty_word() {
        let w = TwistWord::new(1, vec![]).unwrap();
        assert_eq!(word_product(&w), Err(Error::EmptyWord));
        assert_eq!(signature_from_word(&w), Err(Error::EmptyWord));
    }

    #[test]
    fn calibration_values() {
        for (n, expected) in [(1, -8), (2, -16), (3, -24)] {
            assert_eq!(
                signature_from_word(&TwistWord::torus_calibration(n)).unwrap(),
                expected
            );
        }
    }

    #[test]
    fn open_word_is_rejected() {
        let w = TwistWord::new(1, vec![vec![1, 0], vec![0, 1]]).unwrap();
        match signature_from_word(&w) {
            Err(Error::NonTrivialMonodromy(m)) => assert_eq!(m, tb().mul(&ta()).unwrap()),
            other => panic!("{other:?}"),
        }
    }
}
