//! Characteristic polynomials of integer matrices (Faddeev–LeVerrier).
//!
//! Every intermediate matrix is integral and each trace is exactly divisible
//! by its step index. A checked `i128` pass covers the usual small Seidel
//! matrices; overflow falls back to big integers.

use num_bigint::BigInt;
use num_traits::Zero;

use super::matrix::IntMatrix;
use super::poly::IntPoly;

/// `det(xI − M)`, lowest degree first.
pub fn char_poly(m: &IntMatrix) -> IntPoly {
    match char_poly_i128(m) {
        Some(c) => IntPoly::new(c.into_iter().map(BigInt::from).collect()),
        None => IntPoly::new(char_poly_big(m)),
    }
}

fn char_poly_i128(m: &IntMatrix) -> Option<Vec<i128>> {
    let n = m.order();
    let a: Vec<i128> = (0..n * n).map(|k| m.get(k / n, k % n) as i128).collect();
    let mut coeffs = vec![0i128; n + 1];
    coeffs[n] = 1;
    let mut mk = vec![0i128; n * n];
    let mut prod = vec![0i128; n * n];
    for k in 1..=n {
        // M_k = A·M_{k−1} + c_{n−k+1}·I
        for i in 0..n {
            for j in 0..n {
                let mut s: i128 = 0;
                for t in 0..n {
                    s = s.checked_add(a[i * n + t].checked_mul(mk[t * n + j])?)?;
                }
                prod[i * n + j] = s;
            }
        }
        for i in 0..n {
            prod[i * n + i] = prod[i * n + i].checked_add(coeffs[n - k + 1])?;
        }
        std::mem::swap(&mut mk, &mut prod);
        let mut tr: i128 = 0;
        for i in 0..n {
            for t in 0..n {
                tr = tr.checked_add(a[i * n + t].checked_mul(mk[t * n + i])?)?;
            }
        }
        debug_assert_eq!(tr % k as i128, 0);
        coeffs[n - k] = -tr / k as i128;
    }
    Some(coeffs)
}

fn char_poly_big(m: &IntMatrix) -> Vec<BigInt> {
    let n = m.order();
    let a: Vec<BigInt> = (0..n * n).map(|k| BigInt::from(m.get(k / n, k % n))).collect();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::from(1);
    let mut mk = vec![BigInt::zero(); n * n];
    for k in 1..=n {
        let mut prod = vec![BigInt::zero(); n * n];
        for i in 0..n {
            for t in 0..n {
                if a[i * n + t].is_zero() {
                    continue;
                }
                for j in 0..n {
                    prod[i * n + j] += &a[i * n + t] * &mk[t * n + j];
                }
            }
        }
        for i in 0..n {
            prod[i * n + i] += &coeffs[n - k + 1];
        }
        mk = prod;
        let mut tr = BigInt::zero();
        for i in 0..n {
            for t in 0..n {
                tr += &a[i * n + t] * &mk[t * n + i];
            }
        }
        coeffs[n - k] = -(tr / BigInt::from(k));
    }
    coeffs
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_by_one_zero() {
        assert_eq!(char_poly(&IntMatrix::zeros(1)), IntPoly::from_i64(&[0, 1]));
    }

    #[test]
    fn seidel_of_triangle() {
        let s = IntMatrix::from_fn(3, |i, j| if i == j { 0 } else { -1 });
        assert_eq!(char_poly(&s), IntPoly::from_i64(&[2, -3, 0, 1]));
    }

    #[test]
    fn seidel_of_empty_four() {
        let s = IntMatrix::from_fn(4, |i, j| if i == j { 0 } else { 1 });
        let expect = IntPoly::linear(-1).pow(3).mul(&IntPoly::linear(3));
        assert_eq!(char_poly(&s), expect);
    }

    #[test]
    fn big_path_agrees() {
        let m = IntMatrix::from_fn(5, |i, j| ((i * 7 + j * 3) % 5) as i64 - 2);
        let big = IntPoly::new(char_poly_big(&m));
        assert_eq!(char_poly(&m), big);
    }
}
