use ccbch_core::formulas::thresholds;
use ccbch_core::reference::{comparisons_for, published_rows, Listing, PUBLISHED};
use ccbch_core::table::row;
use ccbch_core::{delta_max, make_frame};

#[test]
fn every_listed_code_is_reproduced() {
    for p in PUBLISHED {
        let frame = make_frame(p.q, p.m).unwrap();
        let r = row(&frame, p.delta).unwrap();
        assert_eq!(
            (r.quantum.n, r.quantum.k, r.quantum.d_lower),
            (p.n, p.k, p.delta),
            "q={} m={} delta={}",
            p.q,
            p.m,
            p.delta
        );
        assert!(r.dual_containing);
    }
}

#[test]
fn large_q_rows_start_at_the_second_threshold() {
    for p in published_rows(Listing::ShortLargeQ).chain(published_rows(Listing::Long)) {
        let frame = make_frame(p.q, p.m).unwrap();
        let (_, t2) = thresholds(&frame).unwrap();
        assert!(p.delta >= t2 && p.delta <= delta_max(&frame).unwrap());
        assert!(comparisons_for(p.q, p.m, p.delta).count() >= 1);
    }
}

#[test]
fn comparison_codes_of_the_same_length_are_never_better_at_equal_distance() {
    for p in PUBLISHED {
        for c in comparisons_for(p.q, p.m, p.delta) {
            let inner = c.code.trim_start_matches("[[");
            let inner = &inner[..inner.find("]]").unwrap()];
            let parts: Vec<&str> = inner.split(',').collect();
            let n: u64 = parts[0].parse().unwrap();
            let k: u64 = parts[1].parse().unwrap();
            let d: u64 = parts[2].trim_start_matches('≥').parse().unwrap();
            assert_eq!(n, p.n, "{}", c.code);
            assert!(k <= p.k || d < p.delta, "{} vs k={} delta={}", c.code, p.k, p.delta);
        }
    }
}
