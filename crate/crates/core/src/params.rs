//! Antenna configurations and every combinatorial/closed-form quantity
//! derived from them: the active user set, the rational optimum `eta`, case
//! classification, scheme block sizes, sum and per-user linear DoF, the LDoF
//! region vertices, and the interference-channel variant.
//!
//! All DoF values are exact rationals; floating point never enters formula
//! evaluation.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::rational::{self, Rational};
use crate::{Error, Result};

/// One receiver: `L` RF chains selecting from `N` preset modes per slot.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct UserAntennas {
    /// Preset mode count N.
    #[serde(rename = "N")]
    pub preset_modes: u32,
    /// RF chain count L (modes selected per slot).
    #[serde(rename = "L")]
    pub rf_chains: u32,
}

/// Broadcast-channel problem instance: M transmit antennas and K receivers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AntennaConfig {
    /// Transmit antenna count M.
    #[serde(rename = "M")]
    pub tx_antennas: u32,
    pub users: Vec<UserAntennas>,
}

impl AntennaConfig {
    pub fn new(tx_antennas: u32, users: Vec<(u32, u32)>) -> Self {
        AntennaConfig {
            tx_antennas,
            users: users
                .into_iter()
                .map(|(n, l)| UserAntennas {
                    preset_modes: n,
                    rf_chains: l,
                })
                .collect(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.tx_antennas < 1 {
            return Err(Error::invalid_config("M", "must be >= 1"));
        }
        if self.users.is_empty() {
            return Err(Error::invalid_config("users", "must contain at least one user"));
        }
        for (k, u) in self.users.iter().enumerate() {
            if u.rf_chains < 1 {
                return Err(Error::invalid_config(format!("users[{k}].L"), "must be >= 1"));
            }
            if u.preset_modes < u.rf_chains {
                return Err(Error::invalid_config(
                    format!("users[{k}].N"),
                    format!("must be >= L (got N={} < L={})", u.preset_modes, u.rf_chains),
                ));
            }
        }
        Ok(())
    }

    pub fn k(&self) -> usize {
        self.users.len()
    }
}

/// Interference-channel instance: each user pairs with its own transmitter.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IcConfig {
    pub users: Vec<IcUser>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct IcUser {
    /// Transmit antennas of this user's transmitter.
    #[serde(rename = "M")]
    pub tx_antennas: u32,
    #[serde(rename = "N")]
    pub preset_modes: u32,
    #[serde(rename = "L")]
    pub rf_chains: u32,
}

impl IcConfig {
    pub fn new(users: Vec<(u32, u32, u32)>) -> Self {
        IcConfig {
            users: users
                .into_iter()
                .map(|(m, n, l)| IcUser {
                    tx_antennas: m,
                    preset_modes: n,
                    rf_chains: l,
                })
                .collect(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.users.is_empty() {
            return Err(Error::invalid_config("users", "must contain at least one user"));
        }
        for (k, u) in self.users.iter().enumerate() {
            if u.rf_chains < 1 {
                return Err(Error::invalid_config(format!("users[{k}].L"), "must be >= 1"));
            }
            if u.preset_modes < u.rf_chains {
                return Err(Error::invalid_config(
                    format!("users[{k}].N"),
                    "must be >= L",
                ));
            }
            if u.tx_antennas < u.preset_modes {
                return Err(Error::invalid_config(
                    format!("users[{k}].M"),
                    format!(
                        "must be >= N (got M={} < N={})",
                        u.tx_antennas, u.preset_modes
                    ),
                ));
            }
        }
        Ok(())
    }
}

/// Parameter-space case labels deciding which scheme applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Case {
    /// M <= L_max: the transmit array is the bottleneck.
    #[serde(rename = "Case1")]
    One,
    /// M > L_max and no user has more effective modes than L_max.
    #[serde(rename = "Case2")]
    Two,
    /// Active set nonempty but eta <= L_max: single-user service is optimal.
    #[serde(rename = "Case3_1")]
    ThreeOne,
    /// Active set nonempty and eta > L_max: the alignment scheme pays off.
    #[serde(rename = "Case3_2")]
    ThreeTwo,
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Case::One => "Case1",
            Case::Two => "Case2",
            Case::ThreeOne => "Case3_1",
            Case::ThreeTwo => "Case3_2",
        };
        f.write_str(s)
    }
}

/// Block-size family of the alignment scheme, present only when the active
/// set is nonempty and all products fit in u64.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchemeParams {
    /// S_i per active user (Lambda-local order).
    pub s: Vec<u64>,
    /// U_i per active user.
    pub u_vec: Vec<u64>,
    /// W_i per active user.
    pub w_vec: Vec<u64>,
    /// U = prod (T_p - L_p) over the active set.
    pub u: u64,
    /// W = prod S_p over the active set.
    pub w: u64,
    /// Block length n = U*W + sum L_i U_i W_i.
    pub n: u64,
    /// Block-2 boundaries: a[0] = U*W, a[i] = a[i-1] + L_i U_i W_i, so
    /// active user i (1-based) owns slots (a[i-1], a[i]] and a.last() == n.
    pub a: Vec<u64>,
}

/// Everything derived from a configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct DerivedParams {
    /// T_k = min(M, N_k) per user, original order.
    pub t: Vec<u32>,
    /// L_max = max_k L_k.
    pub l_max: u32,
    /// Active set: original (0-based) indices k with T_k > L_max, ascending.
    pub lambda: Vec<usize>,
    /// Closed-form optimum candidate; zero when the active set is empty.
    pub eta: Rational,
    pub case: Case,
    /// RF-chain counts per user (kept for scheme construction).
    pub l: Vec<u32>,
    pub scheme: Option<SchemeParams>,
}

impl DerivedParams {
    /// Lambda-local index of original user `k`, if active.
    pub fn lambda_local(&self, k: usize) -> Option<usize> {
        self.lambda.iter().position(|&i| i == k)
    }
}

fn eta_over(t_l: &[(u32, u32)]) -> Rational {
    // (sum T_i L_i / (T_i - L_i)) / (1 + sum L_i / (T_i - L_i)); zero on an
    // empty set by convention.
    let mut num = rational::zero();
    let mut den = rational::one();
    for &(t, l) in t_l {
        let gap = i64::from(t) - i64::from(l);
        assert!(gap > 0, "eta requires T > L on the active set");
        num += rational::ratio(i64::from(t) * i64::from(l), gap);
        den += rational::ratio(i64::from(l), gap);
    }
    num / den
}

fn checked_scheme(t_l: &[(u32, u32)]) -> Option<SchemeParams> {
    if t_l.is_empty() {
        return None;
    }
    let mut s = Vec::with_capacity(t_l.len());
    for &(t, l) in t_l {
        let (t, l) = (u64::from(t), u64::from(l));
        let si = if t % l == 0 { t / l - 1 } else { t / l };
        debug_assert!(si >= 1);
        s.push(si);
    }
    let mut u: u64 = 1;
    let mut w: u64 = 1;
    for (si, &(t, l)) in s.iter().zip(t_l) {
        u = u.checked_mul(u64::from(t - l))?;
        w = w.checked_mul(*si)?;
    }
    let mut u_vec = Vec::with_capacity(t_l.len());
    let mut w_vec = Vec::with_capacity(t_l.len());
    for (i, (&si, &(t, l))) in s.iter().zip(t_l).enumerate() {
        let _ = i;
        // U_i = S_i * prod_{p != i} (T_p - L_p) = S_i * U / (T_i - L_i)
        let gap = u64::from(t - l);
        u_vec.push(si.checked_mul(u / gap)?);
        w_vec.push(w / si);
    }
    let mut n = u.checked_mul(w)?;
    let mut a = vec![n];
    for (i, &(_, l)) in t_l.iter().enumerate() {
        let span = u64::from(l)
            .checked_mul(u_vec[i])?
            .checked_mul(w_vec[i])?;
        n = n.checked_add(span)?;
        a.push(n);
    }
    Some(SchemeParams {
        s,
        u_vec,
        w_vec,
        u,
        w,
        n,
        a,
    })
}

/// Derives every combinatorial parameter and classifies the configuration.
pub fn derive(config: &AntennaConfig) -> Result<DerivedParams> {
    config.validate()?;
    let m = config.tx_antennas;
    let l: Vec<u32> = config.users.iter().map(|u| u.rf_chains).collect();
    let l_max = *l.iter().max().unwrap();
    let t: Vec<u32> = config
        .users
        .iter()
        .map(|u| m.min(u.preset_modes))
        .collect();
    let lambda: Vec<usize> = (0..t.len()).filter(|&k| t[k] > l_max).collect();
    let t_l: Vec<(u32, u32)> = lambda.iter().map(|&k| (t[k], l[k])).collect();
    let eta = eta_over(&t_l);
    let case = if m <= l_max {
        Case::One
    } else if lambda.is_empty() {
        Case::Two
    } else if eta <= rational::int(i64::from(l_max)) {
        Case::ThreeOne
    } else {
        Case::ThreeTwo
    };
    let scheme = checked_scheme(&t_l);
    Ok(DerivedParams {
        t,
        l_max,
        lambda,
        eta,
        case,
        l,
        scheme,
    })
}

/// Sum linear DoF: min(M, max(L_max, eta)).
pub fn sum_ldof(config: &AntennaConfig) -> Result<Rational> {
    let d = derive(config)?;
    Ok(rational::min(
        rational::int(i64::from(config.tx_antennas)),
        rational::max(rational::int(i64::from(d.l_max)), d.eta),
    ))
}

/// Per-user linear DoF split. In the alignment case every active user gets
/// its closed-form share; otherwise the lowest-index user with the most RF
/// chains gets min(M, L_max) and everyone else gets zero. The split always
/// sums to `sum_ldof` exactly.
pub fn per_user_ldof(config: &AntennaConfig) -> Result<Vec<Rational>> {
    let d = derive(config)?;
    let k = config.k();
    let mut out = vec![rational::zero(); k];
    match d.case {
        Case::ThreeTwo => {
            let mut den = rational::one();
            for &i in &d.lambda {
                den += rational::ratio(
                    i64::from(d.l[i]),
                    i64::from(d.t[i]) - i64::from(d.l[i]),
                );
            }
            for &i in &d.lambda {
                let num = rational::ratio(
                    i64::from(d.t[i]) * i64::from(d.l[i]),
                    i64::from(d.t[i]) - i64::from(d.l[i]),
                );
                out[i] = num / den.clone();
            }
        }
        _ => {
            let served = (0..k).find(|&i| d.l[i] == d.l_max).unwrap();
            out[served] = rational::int(i64::from(config.tx_antennas.min(d.l_max)));
        }
    }
    Ok(out)
}

/// The LDoF region for configurations with M and every N_k above L_max:
/// vertices plus the defining inequality rows.
#[derive(Debug, Clone, PartialEq)]
pub struct RegionVertices {
    /// Deduplicated vertices, each a K-tuple, sorted lexicographically.
    pub vertices: Vec<Vec<Rational>>,
    /// For each vertex, the supporting active set (0-based user indices at
    /// which the corresponding row inequality is tight).
    pub active_sets: Vec<Vec<usize>>,
    /// Inequality rows: row k has coefficient 1/L_k at k and 1/T_j at j != k;
    /// each vertex satisfies row . d <= 1.
    pub inequalities: Vec<Vec<Rational>>,
}

/// Enumerates the vertices of the LDoF region (one per support subset).
///
/// Requires M > L_max and N_k > L_max for every user; rejects otherwise with
/// the failing hypothesis named.
pub fn region_vertices(config: &AntennaConfig) -> Result<RegionVertices> {
    let d = derive(config)?;
    let m = config.tx_antennas;
    if m <= d.l_max {
        return Err(Error::Precondition(format!(
            "region requires M > L_max (got M={m}, L_max={})",
            d.l_max
        )));
    }
    for (k, u) in config.users.iter().enumerate() {
        if u.preset_modes <= d.l_max {
            return Err(Error::Precondition(format!(
                "region requires N_k > L_max for all users (users[{k}].N={} <= L_max={})",
                u.preset_modes, d.l_max
            )));
        }
    }
    let k = config.k();
    let inequalities: Vec<Vec<Rational>> = (0..k)
        .map(|row| {
            (0..k)
                .map(|col| {
                    if col == row {
                        rational::ratio(1, i64::from(d.l[col]))
                    } else {
                        rational::ratio(1, i64::from(d.t[col]))
                    }
                })
                .collect()
        })
        .collect();

    let mut vertices = Vec::new();
    let mut active_sets = Vec::new();
    for mask in 0u32..(1 << k) {
        let support: Vec<usize> = (0..k).filter(|&i| mask & (1 << i) != 0).collect();
        let t_l: Vec<(u32, u32)> = support.iter().map(|&i| (d.t[i], d.l[i])).collect();
        let mut den = rational::one();
        for &(t, l) in &t_l {
            den += rational::ratio(i64::from(l), i64::from(t) - i64::from(l));
        }
        let mut v = vec![rational::zero(); k];
        for &i in &support {
            let num = rational::ratio(
                i64::from(d.t[i]) * i64::from(d.l[i]),
                i64::from(d.t[i]) - i64::from(d.l[i]),
            );
            v[i] = num / den.clone();
        }
        if !vertices.contains(&v) {
            vertices.push(v);
            active_sets.push(support);
        }
    }
    let mut order: Vec<usize> = (0..vertices.len()).collect();
    order.sort_by(|&a, &b| vertices[a].cmp(&vertices[b]));
    let vertices: Vec<_> = order.iter().map(|&i| vertices[i].clone()).collect();
    let active_sets: Vec<_> = order.iter().map(|&i| active_sets[i].clone()).collect();
    Ok(RegionVertices {
        vertices,
        active_sets,
        inequalities,
    })
}

/// Sum linear DoF of the interference channel (each transmitter has at least
/// as many antennas as its user has preset modes): max(L_max, eta) with the
/// active set taken over N_k and T_k = N_k.
pub fn ic_sum_ldof(config: &IcConfig) -> Result<Rational> {
    config.validate()?;
    let l_max = config.users.iter().map(|u| u.rf_chains).max().unwrap();
    let t_l: Vec<(u32, u32)> = config
        .users
        .iter()
        .filter(|u| u.preset_modes > l_max)
        .map(|u| (u.preset_modes, u.rf_chains))
        .collect();
    let eta = eta_over(&t_l);
    Ok(rational::max(rational::int(i64::from(l_max)), eta))
}

/// Active set and per-user (T, L) of the IC scheme, with T_k = N_k.
pub fn ic_active_set(config: &IcConfig) -> Result<(u32, Vec<usize>)> {
    config.validate()?;
    let l_max = config.users.iter().map(|u| u.rf_chains).max().unwrap();
    let lambda: Vec<usize> = (0..config.users.len())
        .filter(|&k| config.users[k].preset_modes > l_max)
        .collect();
    Ok((l_max, lambda))
}
