use weakid::formats::{
    array_to_json, array_to_text, lincomb_terms, lincomb_to_json, lincomb_to_text, parse_array,
    parse_content, parse_tableau, tableau_to_json, tableau_to_text, FormatError,
};
use weakid_core::bijection::carray_to_dtableau;
use weakid_core::carray::enumerate_c_arrays;
use weakid_core::straighten::straighten;
use weakid_core::tableaux::Content;

#[test]
fn every_small_array_and_tableau_round_trips() {
    for s in enumerate_c_arrays(&Content::new(vec![2, 1, 2, 1])) {
        let a = s.as_array();
        assert_eq!(&parse_array(&array_to_text(a)).unwrap(), a);
        assert_eq!(&parse_array(&array_to_json(a)).unwrap(), a);
        let t = carray_to_dtableau(&s);
        assert_eq!(parse_tableau(&tableau_to_text(&t)).unwrap(), t);
        assert_eq!(parse_tableau(&tableau_to_json(&t)).unwrap(), t);
    }
}

#[test]
fn whitespace_and_blank_lines_are_tolerated() {
    let a = parse_array("\n  2   4 \n\n1 3\n\n").unwrap();
    assert_eq!(array_to_text(&a), "2 4\n1 3\n");
    let t = parse_tableau(" 1 1\n\n2 2 \n").unwrap();
    assert_eq!(tableau_to_text(&t), "1 1\n2 2\n");
}

#[test]
fn malformed_inputs_are_rejected() {
    assert!(matches!(
        parse_array("2 4\n1 3\n5 6"),
        Err(FormatError::Parse { line: 3, .. })
    ));
    assert!(matches!(
        parse_array("{\"top\":[1]}"),
        Err(FormatError::Json(_))
    ));
    assert!(matches!(parse_array("0\n1"), Err(FormatError::Core(_))));
    assert!(matches!(parse_tableau("1\n2 3"), Err(FormatError::Core(_))));
    assert!(matches!(
        parse_tableau("1 -2"),
        Err(FormatError::Parse { line: 1, .. })
    ));
    assert!(parse_content("1,,2").is_ok());
    assert!(parse_content("-1").is_err());
}

#[test]
fn combinations_serialize_in_array_order() {
    let comb = straighten(&parse_array("4 4 5\n1 2 3").unwrap());
    assert_eq!(
        lincomb_to_json(&comb),
        r#"[{"coeff":"-1","top":[4,4,5],"bottom":[1,3,2]},{"coeff":"-1","top":[4,4,5],"bottom":[2,3,1]}]"#
    );
    assert_eq!(
        lincomb_to_text(&comb),
        "-1  4 4 5 / 1 3 2\n-1  4 4 5 / 2 3 1\n"
    );
    assert_eq!(lincomb_terms(&comb).len(), 2);
    let normal = straighten(&parse_array("2 2\n1 1\n").unwrap());
    assert_eq!(lincomb_to_text(&normal), "1  2 2 / 1 1\n");
    assert_eq!(
        lincomb_to_text(&straighten(&parse_array("1\n1").unwrap())),
        "0\n"
    );
}
