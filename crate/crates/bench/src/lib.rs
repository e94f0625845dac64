//! Fixtures shared by the sweep benchmarks.

use zzgl_core::{defining_rep, graded_tensor_power, GradedSignature, WeightDiagonalRep};

pub fn signature(text: &str) -> GradedSignature {
    text.parse().expect("valid signature literal")
}

/// The k-th graded tensor power of the defining representation.
pub fn tensor_power(sig: &GradedSignature, k: usize) -> WeightDiagonalRep {
    graded_tensor_power(&defining_rep(sig), k).expect("valid power")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_build() {
        let sig = signature("1,1|1,1");
        assert_eq!(tensor_power(&sig, 2).dimension(), 16);
    }
}
