//! The pair of scheduling index functions that interleave every user's
//! alignment sub-units into one shared first block.
//!
//! `f` maps a global block-1 segment index onto a (unit, sub-unit) pair for
//! one user; `g` is its inverse. Both are exposed together with exhaustive
//! checkers for their two proved properties: invertibility and the
//! constancy of `f2 . g` in the sub-unit argument, which is what makes
//! interference reconstructible from a single block-2 observation.
//!
//! All interfaces are 1-based, matching the scheme's slot arithmetic;
//! quotient/remainder follow the nonnegative convention.

use crate::{Error, Result};

/// Per-active-user repetition factors plus their prefix products.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexContext {
    s: Vec<u64>,
    /// prefix[q] = product of s[0..q]; prefix[0] = 1.
    prefix: Vec<u64>,
}

impl IndexContext {
    pub fn new(s: Vec<u64>) -> Result<Self> {
        if s.is_empty() {
            return Err(Error::Precondition("index context needs at least one factor".into()));
        }
        let mut prefix = Vec::with_capacity(s.len() + 1);
        prefix.push(1u64);
        for (i, &v) in s.iter().enumerate() {
            if v < 1 {
                return Err(Error::OutOfRange(format!("S[{i}] must be >= 1")));
            }
            let next = prefix[i]
                .checked_mul(v)
                .ok_or_else(|| Error::Overflow("prefix product".into()))?;
            prefix.push(next);
        }
        Ok(IndexContext { s, prefix })
    }

    pub fn len(&self) -> usize {
        self.s.len()
    }

    pub fn is_empty(&self) -> bool {
        self.s.is_empty()
    }

    /// W = product of all factors.
    pub fn w(&self) -> u64 {
        *self.prefix.last().unwrap()
    }

    /// S_i (1-based user index).
    pub fn s_at(&self, i: usize) -> u64 {
        self.s[i - 1]
    }

    /// W_i = W / S_i (1-based user index).
    pub fn w_at(&self, i: usize) -> u64 {
        self.w() / self.s[i - 1]
    }

    fn check_user(&self, i: usize) -> Result<()> {
        if i < 1 || i > self.s.len() {
            return Err(Error::OutOfRange(format!(
                "user index {i} not in [1, {}]",
                self.s.len()
            )));
        }
        Ok(())
    }
}

/// Segment -> (unit j, sub-unit k) for user `i`; all arguments 1-based.
pub fn f(ctx: &IndexContext, i: usize, l: u64) -> Result<(u64, u64)> {
    ctx.check_user(i)?;
    if l < 1 || l > ctx.w() {
        return Err(Error::OutOfRange(format!("l={l} not in [1, {}]", ctx.w())));
    }
    let below = ctx.prefix[i - 1]; // prod_{p<i} S_p
    let upto = ctx.prefix[i]; // prod_{p<=i} S_p
    let l0 = l - 1;
    let j = (l0 / upto) * below + 1 + l0 % below;
    let k = (l0 % upto) / below + 1;
    Ok((j, k))
}

/// (unit j, sub-unit k) -> segment for user `i`; inverse of [`f`].
pub fn g(ctx: &IndexContext, i: usize, j: u64, k: u64) -> Result<u64> {
    ctx.check_user(i)?;
    if j < 1 || j > ctx.w_at(i) {
        return Err(Error::OutOfRange(format!(
            "j={j} not in [1, {}]",
            ctx.w_at(i)
        )));
    }
    if k < 1 || k > ctx.s_at(i) {
        return Err(Error::OutOfRange(format!(
            "k={k} not in [1, {}]",
            ctx.s_at(i)
        )));
    }
    let below = ctx.prefix[i - 1];
    let upto = ctx.prefix[i];
    let j0 = j - 1;
    Ok(1 + (j0 / below) * upto + j0 % below + (k - 1) * below)
}

/// Exhaustively confirms g(i, f(i, l)) == l over the whole domain.
pub fn check_inverse(ctx: &IndexContext, i: usize) -> Result<bool> {
    ctx.check_user(i)?;
    for l in 1..=ctx.w() {
        let (j, k) = f(ctx, i, l)?;
        if g(ctx, i, j, k)? != l {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Closed form of f2(i, g(i', j, k)); independent of `k` by construction.
fn f2_of_g_closed(ctx: &IndexContext, i: usize, i_prime: usize, j: u64) -> u64 {
    let j0 = j - 1;
    if i < i_prime {
        (j0 % ctx.prefix[i_prime - 1]) / ctx.prefix[i - 1] + 1
    } else {
        // Peel the factors strictly between i' and i (exclusive/inclusive).
        let between_incl: u64 = ctx.s[i_prime..i].iter().product(); // prod_{p=i'+1..=i}
        let between_excl: u64 = ctx.s[i_prime..i - 1].iter().product(); // prod_{p=i'+1..=i-1}
        let a0 = j0 / ctx.prefix[i_prime - 1];
        let b1 = a0 % between_incl;
        b1 / between_excl + 1
    }
}

/// Verifies that f2(i, g(i', j, k)) does not depend on k, for every j, both
/// by direct evaluation and against the closed form.
pub fn check_constancy(ctx: &IndexContext, i: usize, i_prime: usize) -> Result<bool> {
    ctx.check_user(i)?;
    ctx.check_user(i_prime)?;
    if i == i_prime {
        return Err(Error::Precondition("constancy check needs i != i'".into()));
    }
    for j in 1..=ctx.w_at(i_prime) {
        let expect = f2_of_g_closed(ctx, i, i_prime, j);
        for k in 1..=ctx.s_at(i_prime) {
            let l = g(ctx, i_prime, j, k)?;
            let (_, f2) = f(ctx, i, l)?;
            if f2 != expect {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn ctx(s: &[u64]) -> IndexContext {
        IndexContext::new(s.to_vec()).unwrap()
    }

    #[test]
    fn f_matches_two_user_tables() {
        let c = ctx(&[2, 1]);
        assert_eq!(f(&c, 1, 1).unwrap(), (1, 1));
        assert_eq!(f(&c, 1, 2).unwrap(), (1, 2));
        assert_eq!(f(&c, 2, 1).unwrap(), (1, 1));
        assert_eq!(f(&c, 2, 2).unwrap(), (2, 1));
    }

    #[test]
    fn f_of_first_segment_is_origin() {
        for s in [&[3u64, 2, 4][..], &[1, 1, 1], &[4, 4]] {
            let c = ctx(s);
            for i in 1..=c.len() {
                assert_eq!(f(&c, i, 1).unwrap(), (1, 1));
            }
        }
    }

    #[test]
    fn g_examples_and_inverse() {
        let c = ctx(&[2, 1]);
        assert_eq!(g(&c, 1, 1, 2).unwrap(), 2);
        assert_eq!(g(&c, 1, 1, 1).unwrap(), 1);
        let c = ctx(&[2, 2]);
        assert_eq!(g(&c, 2, 1, 2).unwrap(), 3);
        let (j, k) = f(&c, 2, 3).unwrap();
        assert_eq!(g(&c, 2, j, k).unwrap(), 3);
    }

    #[test]
    fn out_of_range_arguments_are_rejected() {
        let c = ctx(&[2, 2]);
        assert!(f(&c, 1, 0).is_err());
        assert!(f(&c, 1, 5).is_err());
        assert!(f(&c, 3, 1).is_err());
        assert!(g(&c, 1, 3, 1).is_err());
        assert!(g(&c, 1, 1, 3).is_err());
        assert!(check_constancy(&c, 1, 1).is_err());
    }

    #[test]
    fn inverse_holds_on_spot_checks() {
        for (s, i) in [(&[2u64, 1][..], 1), (&[2, 1], 2), (&[1, 1, 1], 2), (&[3, 2, 4], 2)] {
            assert!(check_inverse(&ctx(s), i).unwrap());
        }
    }

    #[test]
    fn constancy_holds_on_spot_checks() {
        let c = ctx(&[2, 2]);
        assert_eq!(g(&c, 2, 1, 1).unwrap(), 1);
        assert_eq!(g(&c, 2, 1, 2).unwrap(), 3);
        assert!(check_constancy(&c, 1, 2).unwrap());
        assert!(check_constancy(&ctx(&[2, 1]), 1, 2).unwrap());
        let c = ctx(&[2, 3, 2]);
        for i in 1..=3 {
            for ip in 1..=3 {
                if i != ip {
                    assert!(check_constancy(&c, i, ip).unwrap());
                }
            }
        }
    }

    /// Every S-vector with entries in [1,4] and length <= 4: f is a bijection
    /// onto the (j,k) grid, g inverts it, and constancy holds with the
    /// closed form agreeing everywhere.
    #[test]
    fn exhaustive_small_grid() {
        fn vectors(len: usize) -> Vec<Vec<u64>> {
            if len == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for rest in vectors(len - 1) {
                for v in 1..=4u64 {
                    let mut s = rest.clone();
                    s.push(v);
                    out.push(s);
                }
            }
            out
        }
        for len in 1..=4usize {
            for s in vectors(len) {
                let c = ctx(&s);
                for i in 1..=len {
                    assert!(check_inverse(&c, i).unwrap(), "S={s:?} i={i}");
                    let mut seen = HashSet::new();
                    for l in 1..=c.w() {
                        let jk = f(&c, i, l).unwrap();
                        assert!(jk.0 >= 1 && jk.0 <= c.w_at(i));
                        assert!(jk.1 >= 1 && jk.1 <= c.s_at(i));
                        assert!(seen.insert(jk), "collision S={s:?} i={i} l={l}");
                    }
                    assert_eq!(seen.len() as u64, c.w());
                    for ip in 1..=len {
                        if i != ip {
                            assert!(check_constancy(&c, i, ip).unwrap(), "S={s:?} {i},{ip}");
                        }
                    }
                }
            }
        }
    }
}
