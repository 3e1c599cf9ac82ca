use absind::{BooleanFunction, Format, PointIndex};
use proptest::prelude::*;

fn arb_function() -> impl Strategy<Value = BooleanFunction> {
    (2u32..=12).prop_flat_map(|n| {
        let words = ((1usize << n) + 63) / 64;
        proptest::collection::vec(any::<u64>(), words)
            .prop_map(move |w| BooleanFunction::from_words(n, w).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn parse_inverts_serialize(f in arb_function()) {
        for format in [Format::Ascii01, Format::Raw, Format::Hex] {
            let bytes = f.serialize(format);
            prop_assert_eq!(&BooleanFunction::parse(&bytes, format, f.n()).unwrap(), &f);
        }
    }

    #[test]
    fn xor_translation(f in arb_function(), i in any::<usize>(), u in any::<usize>()) {
        let mask = f.len() - 1;
        let (i, u) = (PointIndex::new(i & mask), PointIndex::new(u & mask));
        let shifted = i ^ u;
        prop_assert_eq!(shifted.value(), i.value() ^ u.value());
        prop_assert_eq!(f.evaluate(shifted).unwrap(), f.bit(i.value() ^ u.value()));
    }
}

#[test]
fn wrapped_ascii_file() {
    let text = "0101\n0101\n";
    let f = BooleanFunction::parse(text.as_bytes(), Format::Ascii01, 3).unwrap();
    assert_eq!(f.to_string(), "01010101");
}
