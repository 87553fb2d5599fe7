#![no_main]

use std::sync::OnceLock;

use gspin_core::dsl::{parse_lproduct, parse_param_file};
use gspin_core::symbolic::RelationEnv;
use libfuzzer_sys::fuzz_target;

const ENV: &str = "env {
  gen chi;
  gen eta order 2 ramified;
  cusp sigma dim 2 selftwists {eta};
  cusp tau dim 2;
  iso tau = sigma chi;
}
group gspin4;
lift m = Q([sigma]);
lift n = Q([tau]);
";

fn env() -> &'static RelationEnv {
    static ENV_CELL: OnceLock<RelationEnv> = OnceLock::new();
    ENV_CELL.get_or_init(|| parse_param_file(ENV).unwrap().build_env())
}

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(l) = parse_lproduct(s, env()) {
        let again = parse_lproduct(&l.to_string(), env()).expect("canonical text reparses");
        assert_eq!(again, l);
    }
});
