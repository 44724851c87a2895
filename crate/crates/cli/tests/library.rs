use graded_basic::commands;
use graded_basic::formats::{module_from_file, module_to_file, points_from_file, points_to_file, sections_from_file, section_to_file, ModuleFile};
use graded_basic::report::{BettiReport, BoundsReport, Report};
use graded_basic::sampling::{random_point_set, random_presentation, random_sections};
use graded_basic::{render, CliError, Format};
use graded_basic_core::{Error, PrimeField, Rationals};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn files_roundtrip_through_json() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..30 {
        let m = random_presentation(&Rationals, &mut rng, 3, 3);
        let file = module_to_file(&Rationals, &m);
        let text = serde_json::to_string(&file).unwrap();
        let back: ModuleFile = serde_json::from_str(&text).unwrap();
        assert_eq!(module_from_file(&Rationals, &back, "m").unwrap(), m);

        let secs = random_sections(&Rationals, &mut rng, &m, 4);
        let files: Vec<_> = secs.iter().map(|s| section_to_file(&Rationals, s)).collect();
        assert_eq!(sections_from_file(&Rationals, &m, &files, "s").unwrap(), secs);

        let z = random_point_set(&Rationals, &mut rng, 5, 4);
        let pf = points_to_file(&Rationals, z.points());
        assert_eq!(points_from_file(&Rationals, &pf, "p").unwrap(), z);
    }
}

#[test]
fn reports_reparse_and_match_text() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..10 {
        let z = random_point_set(&Rationals, &mut rng, 6, 3);
        let b = commands::betti(&Rationals, &z).unwrap();
        let back: BettiReport = serde_json::from_str(&render(&b, Format::Json)).unwrap();
        assert_eq!(back, b);
        let r = commands::bounds(&Rationals, &z).unwrap();
        let back: BoundsReport = serde_json::from_str(&render(&r, Format::Json)).unwrap();
        assert_eq!(back, r);
        assert!(r.text().contains(&format!("cb_index = {}", r.cb_index)));
        assert!(r.text().contains(&format!("{} <= {} <= {}", r.lower, r.cb_index, r.upper)));
    }
}

#[test]
fn shrink_over_a_prime_field() {
    let f = PrimeField::new(101).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..20 {
        let m = random_presentation(&f, &mut rng, 3, 2);
        let secs = random_sections(&f, &mut rng, &m, 3);
        let z = random_point_set(&f, &mut rng, 3, 5);
        let r = commands::shrink(&f, &m, &secs, &z, None).unwrap();
        assert!(r.ok);
    }
}

#[test]
fn exit_codes() {
    assert_eq!(CliError::input("x", "y").exit_code(), 1);
    assert_eq!(CliError::BoundViolation("x".into()).exit_code(), 2);
    let hyp: CliError = Error::HypothesisViolation { point: 0, required: 2, actual: 1 }.into();
    assert_eq!(hyp.exit_code(), 3);
    let gen: CliError = Error::GenerationFailure { point: 0, width: 1, mu: 2 }.into();
    assert_eq!(gen.exit_code(), 3);
    assert_eq!(CliError::PostCheck("x".into()).exit_code(), 4);
    let small: CliError = Error::FieldTooSmall { characteristic: 3, points: 4 }.into();
    assert_eq!(small.exit_code(), 1);
    let internal: CliError = Error::Internal("x".into()).into();
    assert_eq!(internal.exit_code(), 5);
}
