use std::fs;

use klmov_core::algebra::{parse_rational, LaurentQT, Rational, RationalQT};
use klmov_core::characters::{brauer_labels, read_cached, write_cached, BrauerCharTable};
use klmov_core::combinatorics::{partitions_of, MultiPartition, Partition};
use klmov_core::torus::unlink_invariant;
use klmov_core::typeb::{pb_element_in_sb, pb_unknot_value, sb_closed_form, sb_in_pb, SbElement};
use proptest::prelude::*;

fn partition(max: usize) -> impl Strategy<Value = Partition> {
    (0..=max).prop_flat_map(|n| {
        let all = partitions_of(n).unwrap();
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn qt() -> impl Strategy<Value = RationalQT> {
    (prop::collection::vec((-3i64..=3, -2i64..=2, -4i64..=4), 1..5), 0i64..=2).prop_map(|(terms, d)| {
        let num = LaurentQT::from_terms(terms.into_iter().map(|(a, b, c)| (a, b, Rational::from_integer(c.into()))));
        (0..d).fold(RationalQT::from_poly(num), |x, h| &x * &RationalQT::inv_q_binomial(h + 1))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn partition_text_round_trip(a in partition(7)) {
        let back: Partition = a.to_string().parse().unwrap();
        prop_assert_eq!(&back, &a);
        prop_assert_eq!(a.conjugate().conjugate(), a.clone());
        prop_assert_eq!(a.conjugate().size(), a.size());
    }

    #[test]
    fn multipartition_text_round_trip(a in partition(3), b in partition(3), c in partition(2)) {
        let m = MultiPartition::new(vec![a, b, c]);
        let back: MultiPartition = m.to_string().parse().unwrap();
        prop_assert_eq!(back, m);
    }

    #[test]
    fn rational_text_round_trip(x in qt()) {
        prop_assert_eq!(parse_rational(&x.to_string()).unwrap(), x);
    }

    #[test]
    fn sb_pb_round_trip(a in partition(4)) {
        let x = sb_in_pb(&a).unwrap();
        prop_assert_eq!(pb_element_in_sb(&x).unwrap(), SbElement::basis(a));
    }

    // The power-sum route and the hook closed form are computed independently.
    #[test]
    fn sb_expansion_matches_closed_form(a in partition(4)) {
        let via_pb: RationalQT = sb_in_pb(&a).unwrap().terms().map(|(mu, c)| pb_unknot_value(mu).scale(c)).sum();
        prop_assert_eq!(via_pb, (*sb_closed_form(&a)).clone());
    }

    #[test]
    fn unlink_is_multiplicative(a in partition(3), b in partition(3)) {
        let both = unlink_invariant(&MultiPartition::new(vec![a.clone(), b.clone()]));
        let split = &unlink_invariant(&MultiPartition::new(vec![a])) * &unlink_invariant(&MultiPartition::new(vec![b]));
        prop_assert_eq!(both, split);
    }
}

#[test]
fn cache_round_trip_and_corruption() {
    let dir = tempfile::tempdir().unwrap();
    for n in 1..=4 {
        let written = write_cached(dir.path(), n).unwrap();
        let read = read_cached(dir.path(), n).expect("cached table loads");
        assert_eq!(read, written);
        assert_eq!(read, BrauerCharTable::compute(n));
        assert_eq!(read.labels, brauer_labels(n));
    }
    let path = fs::read_dir(dir.path())
        .unwrap()
        .map(|e| e.unwrap().path())
        .find(|p| p.to_string_lossy().contains("n2"))
        .unwrap();
    fs::write(&path, "{not json").unwrap();
    assert!(read_cached(dir.path(), 2).is_none());
    fs::write(&path, r#"{"schema":"brauer-chars-v1","n":2,"labels":[],"classes":[],"values":[]}"#).unwrap();
    assert!(read_cached(dir.path(), 2).is_none());
    assert!(read_cached(dir.path(), 5).is_none());
}
