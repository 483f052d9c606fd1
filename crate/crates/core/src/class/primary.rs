//! Critical data and primary labels.

use std::fmt;

use super::strong_decompose;
use crate::error::{Error, Result};
use crate::mf::MatrixFactorization;
use crate::ring::{factorize, RingElement};

/// `W = unit * W0 * prod p^n` with `W0` square-free and every `n >= 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CriticalData {
    pub w: RingElement,
    pub unit: RingElement,
    pub w0: RingElement,
    pub critical: Vec<(RingElement, u32)>,
}

impl CriticalData {
    pub fn order_of(&self, p: &RingElement) -> Option<u32> {
        self.critical.iter().find(|(q, _)| q == p).map(|(_, n)| *n)
    }

    pub fn is_non_critical(&self) -> bool {
        self.critical.is_empty()
    }
}

pub fn critical_decompose(w: &RingElement) -> Result<CriticalData> {
    if w.is_zero() {
        return Err(Error::ZeroPotential);
    }
    if w.is_unit() {
        return Err(Error::Precondition(format!("{w} is a unit")));
    }
    let pf = factorize(w)?;
    let mut w0 = w.ring().one();
    let mut critical = Vec::new();
    for (p, n) in pf.factors {
        if n == 1 {
            w0 = &w0 * &p;
        } else {
            critical.push((p, n));
        }
    }
    Ok(CriticalData {
        w: w.clone(),
        unit: pf.unit,
        w0,
        critical,
    })
}

/// `prod p^floor(n/2)`: the lcm of all `d` with `d^2 | W`.
pub fn critical_ideal_generator(cd: &CriticalData) -> RingElement {
    cd.critical
        .iter()
        .fold(cd.w.ring().one(), |acc, (p, n)| &acc * &p.pow(n / 2))
}

/// The largest `k` with `p^k | d`, for non-zero `d` and a non-unit `p`.
pub fn valuation(d: &RingElement, p: &RingElement) -> Result<u32> {
    if d.is_zero() || p.is_unit() || p.is_zero() {
        return Err(Error::Precondition(format!("valuation of {d} at {p}")));
    }
    let mut k = 0;
    let mut rest = d.clone();
    while p.divides(&rest)? {
        rest = rest.exact_div(p)?;
        k += 1;
    }
    Ok(k)
}

/// An hmf isomorphism class: a sorted multiset of primary labels `(p, i)`
/// standing for `e_(p^i)`, with `1 <= i <= n_p - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MfClass {
    pub critical_data: CriticalData,
    pub labels: Vec<(RingElement, u32)>,
}

impl MfClass {
    pub fn new(critical_data: CriticalData, mut labels: Vec<(RingElement, u32)>) -> Result<Self> {
        for (p, i) in &labels {
            let n = critical_data
                .order_of(p)
                .ok_or_else(|| Error::Precondition(format!("{p} is not a critical prime")))?;
            if *i == 0 || *i >= n {
                return Err(Error::Range(format!("size {i} for {p}^{n}")));
            }
        }
        labels.sort();
        Ok(MfClass {
            critical_data,
            labels,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.labels.is_empty()
    }
}

impl fmt::Display for MfClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.labels.is_empty() {
            return f.write_str("0");
        }
        for (k, (p, i)) in self.labels.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "e[({p})^{i}]")?;
        }
        Ok(())
    }
}

pub fn primary_decompose(a: &MatrixFactorization, cd: &CriticalData) -> Result<MfClass> {
    if a.w() != &cd.w {
        return Err(Error::Precondition(format!(
            "critical data is for {} but the factorization has W = {}",
            cd.w,
            a.w()
        )));
    }
    let mut labels = Vec::new();
    for d in strong_decompose(a)?.factors {
        for (p, n) in &cd.critical {
            let k = valuation(&d, p)?;
            if k >= 1 && k < *n {
                labels.push((p.clone(), k));
            }
        }
    }
    MfClass::new(cd.clone(), labels)
}

/// Equality of primary classes.
pub fn hmf_iso(a: &MatrixFactorization, b: &MatrixFactorization) -> Result<bool> {
    a.same_potential(b)?;
    let cd = critical_decompose(a.w())?;
    Ok(primary_decompose(a, &cd)?.labels == primary_decompose(b, &cd)?.labels)
}

/// The image under localization at the critical prime `p`.
pub fn localize_class(c: &MfClass, p: &RingElement) -> Result<MfClass> {
    let p = p.canonical();
    if c.critical_data.order_of(&p).is_none() {
        return Err(Error::Precondition(format!("{p} is not a critical prime")));
    }
    Ok(MfClass {
        critical_data: c.critical_data.clone(),
        labels: c.labels.iter().filter(|(q, _)| *q == p).cloned().collect(),
    })
}

/// `(p, i) -> (p, n_p - i)`.
pub fn suspend_class(c: &MfClass) -> MfClass {
    let mut labels: Vec<_> = c
        .labels
        .iter()
        .map(|(p, i)| {
            let n = c
                .critical_data
                .order_of(p)
                .expect("labels use critical primes");
            (p.clone(), n - i)
        })
        .collect();
    labels.sort();
    MfClass {
        critical_data: c.critical_data.clone(),
        labels,
    }
}

/// `⊕ e_(p^i)` over the labels.
pub fn realize_class(c: &MfClass) -> Result<MatrixFactorization> {
    let vs: Vec<_> = c.labels.iter().map(|(p, i)| p.pow(*i)).collect();
    MatrixFactorization::elementary_sum(&vs, &c.critical_data.w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;

    fn z(n: i64) -> RingElement {
        RingElement::from(n)
    }

    fn e(v: i64, w: i64) -> MatrixFactorization {
        MatrixFactorization::elementary(&z(v), &z(w)).unwrap()
    }

    #[test]
    fn critical_data_examples() {
        let cd = critical_decompose(&z(360)).unwrap();
        assert_eq!(cd.w0, z(5));
        assert_eq!(cd.critical, vec![(z(2), 3), (z(3), 2)]);
        assert_eq!(critical_ideal_generator(&cd), z(6));

        let cd = critical_decompose(&z(30)).unwrap();
        assert_eq!(cd.w0, z(30));
        assert!(cd.is_non_critical());
        assert_eq!(critical_ideal_generator(&cd), z(1));

        let cd = critical_decompose(&z(81)).unwrap();
        assert_eq!(cd.w0, z(1));
        assert_eq!(critical_ideal_generator(&cd), z(9));

        assert!(critical_decompose(&z(0)).is_err());
        assert!(critical_decompose(&z(-1)).is_err());
    }

    #[test]
    fn negative_potential_keeps_sign_in_unit() {
        let cd = critical_decompose(&z(-12)).unwrap();
        assert_eq!(cd.unit, z(-1));
        assert_eq!(cd.w0, z(3));
        assert_eq!(cd.critical, vec![(z(2), 2)]);
    }

    #[test]
    fn primary_labels() {
        let cd = critical_decompose(&z(360)).unwrap();
        let c = primary_decompose(&e(12, 360), &cd).unwrap();
        assert_eq!(c.labels, vec![(z(2), 2), (z(3), 1)]);
        assert!(primary_decompose(&e(5, 360), &cd).unwrap().is_zero());

        let cd = critical_decompose(&z(12)).unwrap();
        let a = MatrixFactorization::elementary_sum(&[z(2), z(6)], &z(12)).unwrap();
        assert_eq!(
            primary_decompose(&a, &cd).unwrap().labels,
            vec![(z(2), 1), (z(2), 1)]
        );
        assert!(primary_decompose(&e(2, 8), &cd).is_err());
    }

    #[test]
    fn hmf_isomorphism() {
        assert!(hmf_iso(&e(2, 12), &e(6, 12)).unwrap());
        assert!(!hmf_iso(&e(2, 8), &e(4, 8)).unwrap());
        let a = e(4, 72);
        assert!(hmf_iso(&a, &a.direct_sum(&e(1, 72)).unwrap()).unwrap());
    }

    #[test]
    fn localization_and_suspension() {
        let cd = critical_decompose(&z(360)).unwrap();
        let c = MfClass::new(cd.clone(), vec![(z(3), 1), (z(2), 2)]).unwrap();
        assert_eq!(localize_class(&c, &z(2)).unwrap().labels, vec![(z(2), 2)]);
        assert_eq!(localize_class(&c, &z(-3)).unwrap().labels, vec![(z(3), 1)]);
        assert!(localize_class(&c, &z(5)).is_err());
        let empty = MfClass::new(cd.clone(), vec![]).unwrap();
        assert!(localize_class(&empty, &z(2)).unwrap().is_zero());

        let s = suspend_class(&c);
        assert_eq!(s.labels, vec![(z(2), 1), (z(3), 1)]);
        let a = realize_class(&c).unwrap();
        assert_eq!(primary_decompose(&a.suspension(), &cd).unwrap(), s);
    }

    #[test]
    fn label_validation() {
        let cd = critical_decompose(&z(360)).unwrap();
        assert!(matches!(
            MfClass::new(cd.clone(), vec![(z(2), 3)]),
            Err(Error::Range(_))
        ));
        assert!(MfClass::new(cd, vec![(z(5), 1)]).is_err());
    }

    #[test]
    fn polynomial_classes() {
        let r = Ring::Poly(3);
        let x = r.x().unwrap();
        let x1 = &x + &r.one();
        let w = &x.pow(2) * &x1.pow(3);
        let cd = critical_decompose(&w).unwrap();
        assert_eq!(cd.critical, vec![(x.clone(), 2), (x1.clone(), 3)]);
        assert_eq!(critical_ideal_generator(&cd), &x * &x1);
        let a = MatrixFactorization::elementary(&(&x * &x1.pow(2)), &w).unwrap();
        let c = primary_decompose(&a, &cd).unwrap();
        assert_eq!(c.labels, vec![(x, 1), (x1, 2)]);
    }
}
