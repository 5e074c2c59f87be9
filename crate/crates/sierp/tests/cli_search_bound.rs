//! Separate binary: the search bound is read from the environment.

use sierp::cli::{run, SEARCH_BOUND_VAR};

#[test]
fn refused_search_is_indeterminate() {
    std::env::set_var(SEARCH_BOUND_VAR, "4");
    let r = run(["sierp", "class", "find-a", "gen:cycle:8", "1,1"]);
    std::env::remove_var(SEARCH_BOUND_VAR);
    assert_eq!(r.code, 2);
    assert!(r.payload["indeterminate"].is_string(), "{}", r.payload);
    assert!(r.payload["verdict"].is_null());

    let r = run(["sierp", "class", "find-a", "gen:cycle:8", "1,1"]);
    assert_eq!(r.code, 0, "{}", r.payload);
}
