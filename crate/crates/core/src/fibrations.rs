//! Lefschetz fibrations over the sphere and the surface bundles obtained by
//! gluing two equivalent ones along their singular-fiber neighborhoods.
//!
//! Two families are modeled: the involution family `X(h, k)` of genus `h + k`
//! and knot-surgered elliptic surfaces `E(n)_K` of genus `2g + n - 1`. Only
//! the induced invariants are tracked. Singular fibers are a count plus a
//! single flag saying every vanishing cycle is nonseparating.

use std::fmt;

use crate::error::{Error, Result};
use crate::invariants::CharNumbers;
use crate::meyer::{signature_from_word, TwistWord};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Base {
    Sphere,
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("sphere")
    }
}

/// Euler characteristic of a closed surface of the given genus.
pub fn surface_euler(genus: i64) -> i64 {
    2 - 2 * genus
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FibrationDescriptor {
    pub fiber_genus: i64,
    pub base: Base,
    pub singular_fibers: i64,
    pub all_nonseparating: bool,
    pub total: CharNumbers,
    pub label: String,
}

impl FibrationDescriptor {
    /// Builds a descriptor, checking `e = 2(2 - 2g') + s`.
    pub fn new(
        fiber_genus: i64,
        singular_fibers: i64,
        all_nonseparating: bool,
        total: CharNumbers,
        label: impl Into<String>,
    ) -> Result<Self> {
        let label = label.into();
        if fiber_genus < 1 {
            return Err(Error::ParamOutOfRange(format!(
                "{label}: fiber genus {fiber_genus} < 1"
            )));
        }
        if singular_fibers < 0 {
            return Err(Error::ParamOutOfRange(format!(
                "{label}: negative singular fiber count {singular_fibers}"
            )));
        }
        let expected_e = surface_euler(0) * surface_euler(fiber_genus) + singular_fibers;
        if total.e() != expected_e {
            return Err(Error::ParamOutOfRange(format!(
                "{label}: e = {} but a genus {fiber_genus} fibration with {singular_fibers} \
                 nodal fibers has e = {expected_e}",
                total.e()
            )));
        }
        Ok(FibrationDescriptor {
            fiber_genus,
            base: Base::Sphere,
            singular_fibers,
            all_nonseparating,
            total,
            label,
        })
    }
}

impl fmt::Display for FibrationDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: genus {} over the {}, s = {}, {}, {}",
            self.label,
            self.fiber_genus,
            self.base,
            self.singular_fibers,
            if self.all_nonseparating {
                "all nonseparating"
            } else {
                "separating fibers present"
            },
            self.total
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceBundle {
    pub fiber_genus: i64,
    pub base_genus: i64,
    pub e: i64,
    pub sigma: i64,
    pub label: String,
}

impl SurfaceBundle {
    /// Euler characteristic is multiplicative for fiber bundles.
    pub fn euler_is_product(&self) -> bool {
        self.e == surface_euler(self.base_genus) * surface_euler(self.fiber_genus)
    }
}

/// The genus `h + k` fibration from the relation `theta^2 = 1`.
pub fn x_family(h: i64, k: i64) -> Result<FibrationDescriptor> {
    if h < 2 {
        return Err(Error::ParamOutOfRange(format!(
            "X(h,k) needs h >= 2, got h = {h}"
        )));
    }
    if k < 2 || k % 2 != 0 {
        return Err(Error::ParamOutOfRange(format!(
            "X(h,k) needs k >= 2 even, got k = {k}"
        )));
    }
    let total = CharNumbers::from_e_sigma(8 + 4 * h - 2 * k, -4 * (h + 1));
    FibrationDescriptor::new(h + k, 8 * h + 2 * k + 4, true, total, format!("X({h},{k})"))
}

/// Characteristic numbers of the elliptic surface `E(n)`: `chi_h = n`, `c1^2 = 0`.
pub fn elliptic_surface(n: i64) -> Result<CharNumbers> {
    if n < 1 {
        return Err(Error::ParamOutOfRange(format!(
            "E(n) needs n >= 1, got n = {n}"
        )));
    }
    Ok(CharNumbers::from_e_sigma(12 * n, -8 * n))
}

/// Genus `2g + n - 1` Lefschetz fibration on `E(n)_K` for a fibered knot of
/// genus `g`. Knot surgery leaves `e` and `sigma` unchanged.
pub fn knot_surgered_fibration(n: i64, g: i64) -> Result<FibrationDescriptor> {
    if n < 2 {
        return Err(Error::NOrderTooSmall(n));
    }
    if g < 0 {
        return Err(Error::ParamOutOfRange(format!(
            "knot genus must be >= 0, got g = {g}"
        )));
    }
    let total = elliptic_surface(n)?;
    FibrationDescriptor::new(
        2 * g + n - 1,
        16 * n + 8 * g - 8,
        true,
        total,
        format!("E({n})_K[g={g}]"),
    )
}

/// Same fiber genus, same number of singular fibers, all nonseparating.
pub fn equivalent(f1: &FibrationDescriptor, f2: &FibrationDescriptor) -> bool {
    f1.fiber_genus == f2.fiber_genus
        && f1.singular_fibers == f2.singular_fibers
        && f1.all_nonseparating
        && f2.all_nonseparating
}

/// The surface bundle `X1 - X2` obtained by removing neighborhoods of the
/// singular fibers from both fibrations and gluing the complements, the
/// second with reversed orientation. The base is the double of an
/// `s`-punctured sphere, of genus `s - 1`; signatures subtract.
pub fn glue_difference(
    f1: &FibrationDescriptor,
    f2: &FibrationDescriptor,
) -> Result<SurfaceBundle> {
    if !equivalent(f1, f2) {
        return Err(Error::NotEquivalent(format!(
            "{} (genus {}, s = {}, nonsep = {}) vs {} (genus {}, s = {}, nonsep = {})",
            f1.label,
            f1.fiber_genus,
            f1.singular_fibers,
            f1.all_nonseparating,
            f2.label,
            f2.fiber_genus,
            f2.singular_fibers,
            f2.all_nonseparating
        )));
    }
    let s = f1.singular_fibers;
    if s < 1 {
        return Err(Error::ParamOutOfRange(format!(
            "gluing needs at least one singular fiber, {} has none",
            f1.label
        )));
    }
    let base_genus = s - 1;
    Ok(SurfaceBundle {
        fiber_genus: f1.fiber_genus,
        base_genus,
        e: surface_euler(base_genus) * surface_euler(f1.fiber_genus),
        sigma: f1.total.sigma() - f2.total.sigma(),
        label: format!("{} - {}", f1.label, f2.label),
    })
}

/// Euler characteristic of the glued manifold computed by cut and paste.
/// A neighborhood of a nodal fiber has `e = 3 - 2g'`, and the complements are
/// glued along closed 3-manifolds, so `e(Y) = e(X1) + e(X2) - 2 s (3 - 2g')`.
pub fn glued_euler_by_excision(f1: &FibrationDescriptor, f2: &FibrationDescriptor) -> i64 {
    let nodal_neighborhood = 3 - 2 * f1.fiber_genus;
    f1.total.e() + f2.total.e() - 2 * f1.singular_fibers * nodal_neighborhood
}

/// Comparison of an externally supplied monodromy word with the invariants
/// expected of `X(h, k)`: genus `h + k`, `8h + 2k + 4` twists and signature
/// `-4(h + 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XFamilyWordCheck {
    pub h: i64,
    pub k: i64,
    pub word_genus: i64,
    pub expected_genus: i64,
    pub twist_count: i64,
    pub expected_twists: i64,
    pub signature: i64,
    pub expected_signature: i64,
}

impl XFamilyWordCheck {
    pub fn all_match(&self) -> bool {
        self.word_genus == self.expected_genus
            && self.twist_count == self.expected_twists
            && self.signature == self.expected_signature
    }
}

pub fn check_word_against_x_family(word: &TwistWord, h: i64, k: i64) -> Result<XFamilyWordCheck> {
    let x = x_family(h, k)?;
    let signature = signature_from_word(word)?;
    Ok(XFamilyWordCheck {
        h,
        k,
        word_genus: word.genus() as i64,
        expected_genus: x.fiber_genus,
        twist_count: word.len() as i64,
        expected_twists: x.singular_fibers,
        signature,
        expected_signature: x.total.sigma(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Rational64;
    use proptest::prelude::*;

    fn r(n: i64) -> Rational64 {
        Rational64::from_integer(n)
    }

    #[test]
    fn x_family_examples() {
        let x = x_family(5, 2).unwrap();
        assert_eq!((x.fiber_genus, x.singular_fibers), (7, 48));
        assert_eq!((x.total.e(), x.total.sigma()), (24, -24));
        assert_eq!((x.total.chi_h(), x.total.c1_sq()), (r(0), -24));
        assert!(x.all_nonseparating);
        assert_eq!(x.label, "X(5,2)");

        let x = x_family(8, 2).unwrap();
        assert_eq!((x.fiber_genus, x.singular_fibers), (10, 72));
        assert_eq!((x.total.e(), x.total.sigma()), (36, -36));
        assert_eq!((x.total.chi_h(), x.total.c1_sq()), (r(0), -36));

        let x = x_family(2, 2).unwrap();
        assert_eq!((x.fiber_genus, x.singular_fibers), (4, 24));
        assert_eq!((x.total.e(), x.total.sigma()), (12, -12));
        assert_eq!((x.total.chi_h(), x.total.c1_sq()), (r(0), -12));
    }

    #[test]
    fn x_family_closed_forms() {
        for h in 2..40 {
            for k in (2..40).step_by(2) {
                let x = x_family(h, k).unwrap();
                assert_eq!(x.total.chi_h(), r(1) - Rational64::new(k, 2));
                assert_eq!(x.total.c1_sq(), -4 * (h + k - 1));
                assert_eq!(
                    x.total.c1_sq() - 8 * x.total.chi_h().to_integer(),
                    -4 * (h + 1)
                );
            }
        }
    }

    #[test]
    fn x_family_rejects_bad_parameters() {
        for (h, k) in [(1, 2), (5, 0), (5, 3), (5, -2), (0, 0)] {
            assert!(
                matches!(x_family(h, k), Err(Error::ParamOutOfRange(_))),
                "({h},{k})"
            );
        }
    }

    #[test]
    fn elliptic_surface_examples() {
        let e1 = elliptic_surface(1).unwrap();
        assert_eq!((e1.e(), e1.sigma()), (12, -8));
        let e2 = elliptic_surface(2).unwrap();
        assert_eq!(
            (e2.e(), e2.sigma(), e2.chi_h(), e2.c1_sq()),
            (24, -16, r(2), 0)
        );
        let e3 = elliptic_surface(3).unwrap();
        assert_eq!(
            (e3.e(), e3.sigma(), e3.chi_h(), e3.c1_sq()),
            (36, -24, r(3), 0)
        );
        assert!(matches!(
            elliptic_surface(0),
            Err(Error::ParamOutOfRange(_))
        ));
    }

    #[test]
    fn knot_surgered_examples() {
        let f = knot_surgered_fibration(2, 3).unwrap();
        assert_eq!((f.fiber_genus, f.singular_fibers), (7, 48));
        assert_eq!((f.total.e(), f.total.sigma()), (24, -16));

        let f = knot_surgered_fibration(2, 0).unwrap();
        assert_eq!((f.fiber_genus, f.singular_fibers, f.total.e()), (1, 24, 24));

        let f = knot_surgered_fibration(3, 4).unwrap();
        assert_eq!((f.fiber_genus, f.singular_fibers), (10, 72));
        assert_eq!((f.total.e(), f.total.sigma()), (36, -24));
    }

    #[test]
    fn knot_surgered_rejects_small_n_and_negative_genus() {
        assert_eq!(knot_surgered_fibration(1, 2), Err(Error::NOrderTooSmall(1)));
        assert_eq!(knot_surgered_fibration(0, 0), Err(Error::NOrderTooSmall(0)));
        assert!(matches!(
            knot_surgered_fibration(2, -1),
            Err(Error::ParamOutOfRange(_))
        ));
    }

    #[test]
    fn descriptor_rejects_inconsistent_euler() {
        let bad = FibrationDescriptor::new(2, 5, true, CharNumbers::from_e_sigma(0, 0), "bad");
        assert!(matches!(bad, Err(Error::ParamOutOfRange(_))));
        assert!(
            FibrationDescriptor::new(1, 12, true, CharNumbers::from_e_sigma(12, -8), "E(1)")
                .is_ok()
        );
    }

    #[test]
    fn word_check_against_x_family() {
        // the torus word has the wrong genus and length for X(2,2)
        let check = check_word_against_x_family(&TwistWord::torus_calibration(2), 2, 2).unwrap();
        assert_eq!((check.word_genus, check.expected_genus), (1, 4));
        assert_eq!((check.twist_count, check.expected_twists), (24, 24));
        assert_eq!((check.signature, check.expected_signature), (-16, -12));
        assert!(!check.all_match());
    }

    #[test]
    fn equivalence_examples() {
        let x = x_family(5, 2).unwrap();
        assert!(equivalent(&x, &knot_surgered_fibration(2, 3).unwrap()));
        assert!(equivalent(&x, &x));
        assert!(!equivalent(&x, &knot_surgered_fibration(2, 2).unwrap()));

        let mut sep = x.clone();
        sep.all_nonseparating = false;
        assert!(!equivalent(&sep, &sep));
    }

    #[test]
    fn glue_examples() {
        let y = glue_difference(
            &x_family(5, 2).unwrap(),
            &knot_surgered_fibration(2, 3).unwrap(),
        )
        .unwrap();
        assert_eq!((y.fiber_genus, y.base_genus, y.sigma), (7, 47, -8));
        assert!(y.euler_is_product());

        let y = glue_difference(
            &x_family(8, 2).unwrap(),
            &knot_surgered_fibration(3, 4).unwrap(),
        )
        .unwrap();
        assert_eq!((y.fiber_genus, y.base_genus, y.sigma), (10, 71, -12));

        let f = knot_surgered_fibration(4, 2).unwrap();
        assert_eq!(glue_difference(&f, &f).unwrap().sigma, 0);
    }

    #[test]
    fn glue_rejects_inequivalent() {
        let r = glue_difference(
            &x_family(5, 2).unwrap(),
            &knot_surgered_fibration(2, 2).unwrap(),
        );
        assert!(matches!(r, Err(Error::NotEquivalent(_))));
    }

    #[test]
    fn glue_rejects_no_singular_fibers() {
        let trivial = FibrationDescriptor::new(1, 0, true, CharNumbers::zero(), "T2xS2").unwrap();
        assert!(matches!(
            glue_difference(&trivial, &trivial),
            Err(Error::ParamOutOfRange(_))
        ));
    }

    fn nonsep_descriptor() -> impl Strategy<Value = FibrationDescriptor> {
        (1i64..6, 0i64..6, -20i64..20).prop_map(|(genus, s, sigma)| {
            let e = 2 * surface_euler(genus) + s;
            FibrationDescriptor::new(genus, s, true, CharNumbers::from_e_sigma(e, sigma), "t")
                .unwrap()
        })
    }

    proptest! {
        #[test]
        fn equivalence_is_an_equivalence_relation(
            a in nonsep_descriptor(), b in nonsep_descriptor(), c in nonsep_descriptor()
        ) {
            prop_assert!(equivalent(&a, &a));
            prop_assert_eq!(equivalent(&a, &b), equivalent(&b, &a));
            if equivalent(&a, &b) && equivalent(&b, &c) {
                prop_assert!(equivalent(&a, &c));
            }
        }

        #[test]
        fn glue_is_antisymmetric_and_euler_consistent(a in nonsep_descriptor(), sigma in -20i64..20) {
            prop_assume!(a.singular_fibers >= 1);
            let b = FibrationDescriptor::new(a.fiber_genus, a.singular_fibers, true,
                CharNumbers::from_e_sigma(a.total.e(), sigma), "u").unwrap();
            let ab = glue_difference(&a, &b).unwrap();
            let ba = glue_difference(&b, &a).unwrap();
            prop_assert_eq!(ab.sigma, -ba.sigma);
            prop_assert!(ab.euler_is_product());
            prop_assert_eq!(ab.e, glued_euler_by_excision(&a, &b));
        }
    }
}
