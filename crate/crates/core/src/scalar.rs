//! Scalar abstractions shared by the analytic formulas.

use std::fmt::Debug;

use num_traits::{Float, FromPrimitive, Num, ToPrimitive};

/// Field element: enough arithmetic for the rational closed forms.
pub trait Scalar: Num + Clone + PartialOrd + FromPrimitive + ToPrimitive + Debug + Send + Sync {
    fn from_count(k: usize) -> Self {
        Self::from_usize(k).expect("count representable in scalar type")
    }
}

impl<T> Scalar for T where T: Num + Clone + PartialOrd + FromPrimitive + ToPrimitive + Debug + Send + Sync {}

/// IEEE float used by the log-space routines.
pub trait Real: Scalar + Float + Copy {
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("literal representable")
    }
}

impl<T> Real for T where T: Scalar + Float + Copy {}
