//! Leading-order asymptotics of family sequences, used to certify premises.
//!
//! Each quantity is summarized by `lead * p + sub * log p`, up to bounded terms. For
//! `M_p = q^(p^2)`, `log M_{kp} / p = k^2 p log q`. For `M_p = (p!)^s`,
//! `log M_{kp} / p = s k log p + O(1)`. Geometric factors contribute only bounded terms.
//! A combination is bounded above iff it is lexicographically `<= 0`.

use std::ops::{Add, Mul, Sub};

use crate::conditions::{shape, Shape};
use crate::seqcore::LogSequence;

#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Growth {
    pub lead: f64,
    pub sub: f64,
}

impl Add for Growth {
    type Output = Growth;
    fn add(self, o: Growth) -> Growth {
        Growth {
            lead: self.lead + o.lead,
            sub: self.sub + o.sub,
        }
    }
}

impl Sub for Growth {
    type Output = Growth;
    fn sub(self, o: Growth) -> Growth {
        self + o * -1.0
    }
}

impl Mul<f64> for Growth {
    type Output = Growth;
    fn mul(self, k: f64) -> Growth {
        Growth {
            lead: self.lead * k,
            sub: self.sub * k,
        }
    }
}

const ZERO: Growth = Growth { lead: 0.0, sub: 0.0 };

/// `log M_{kp} / p`.
pub(crate) fn log_term(m: &LogSequence, k: f64) -> Option<Growth> {
    Some(match shape(m)? {
        Shape::QGevrey(q) => Growth {
            lead: k * k * q.ln(),
            sub: 0.0,
        },
        Shape::Gevrey(s) => Growth { lead: 0.0, sub: s * k },
        Shape::Geometric => ZERO,
    })
}

/// `log mu_{kp}`.
pub(crate) fn quotient_term(m: &LogSequence, k: f64) -> Option<Growth> {
    Some(match shape(m)? {
        Shape::QGevrey(q) => Growth {
            lead: 2.0 * k * q.ln(),
            sub: 0.0,
        },
        Shape::Gevrey(s) => Growth { lead: 0.0, sub: s },
        Shape::Geometric => ZERO,
    })
}

pub(crate) fn bounded(g: Growth) -> bool {
    const EPS: f64 = 1e-12;
    if g.lead < -EPS {
        true
    } else if g.lead > EPS {
        false
    } else {
        g.sub <= EPS
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_gevrey_doubling_against_tilde() {
        let q = LogSequence::qgevrey(2.0, 64).unwrap();
        // log M_{2p} - log M_p - log M~^a_p over p: (4 - 1 - a) p log q.
        let f = |a: f64| log_term(&q, 2.0).unwrap() - log_term(&q, 1.0).unwrap() - log_term(&q, a).unwrap() * (1.0 / a);
        assert!(!bounded(f(2.0)));
        assert!(bounded(f(3.0)));
    }

    #[test]
    fn gevrey_orders_compare_by_exponent() {
        let g1 = LogSequence::gevrey(1.0, 64).unwrap();
        let g2 = LogSequence::gevrey(2.0, 64).unwrap();
        assert!(bounded(quotient_term(&g1, 2.0).unwrap() - quotient_term(&g2, 1.0).unwrap()));
        assert!(!bounded(quotient_term(&g2, 1.0).unwrap() - quotient_term(&g1, 5.0).unwrap()));
        assert!(log_term(&g1.without_provenance(), 1.0).is_none());
        assert!(bounded(log_term(&LogSequence::ones(8).unwrap(), 3.0).unwrap()));
    }
}
