#![allow(dead_code)]

use lf_forge::meyer::{check_twist_vector, transvection, SympMatrix};
use rand::Rng;

/// Random primitive vector with entries in `-2..=2`.
pub fn random_primitive<R: Rng>(rng: &mut R, genus: usize) -> Vec<i64> {
    loop {
        let c: Vec<i64> = (0..2 * genus).map(|_| rng.gen_range(-2..=2)).collect();
        if check_twist_vector(genus, &c).is_ok() {
            return c;
        }
    }
}

/// Product of `len` random transvections, possibly inverted.
pub fn random_symplectic<R: Rng>(rng: &mut R, genus: usize, len: usize) -> SympMatrix {
    (0..len).fold(SympMatrix::identity(genus), |acc, _| {
        let c = random_primitive(rng, genus);
        let mut t = transvection(genus, &c).unwrap();
        if rng.gen_bool(0.3) {
            t = t.inverse();
        }
        t.mul(&acc).unwrap()
    })
}

pub fn words_dir() -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join("words")
}
