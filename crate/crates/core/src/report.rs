//! Serialization helpers shared by the JSON reports.

use num_rational::BigRational;
use serde::Serializer;

use crate::forms::RationalPoint;

/// Canonical `numerator/denominator` text (denominator always printed).
pub fn rat_text(x: &BigRational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

pub(crate) fn ser_rat<S: Serializer>(x: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&rat_text(x))
}

pub(crate) fn ser_point<S: Serializer>(x: &RationalPoint, s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(x.coords().iter().map(rat_text))
}

pub(crate) fn ser_opt_point<S: Serializer>(x: &Option<RationalPoint>, s: S) -> Result<S::Ok, S::Error> {
    match x {
        Some(p) => ser_point(p, s),
        None => s.serialize_none(),
    }
}
