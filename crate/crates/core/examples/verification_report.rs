// Running a verification suite through the library front end and reading
// the JSON report, as the `torus-mirror` binary does.

use torus_mirror::cli::{run, Command, Input, JobConfig};

type Res = Result<(), Box<dyn std::error::Error>>;

pub fn run_example() -> Res {
    let config = JobConfig { samples: 10, ..JobConfig::new(Command::Verify("pairings".into())) };
    let report = run(&config)?;
    print!("{}", report.to_text());

    let bundle = r#"{
        "schema": "torus-mirror/bundle@1",
        "T": [[[0, 1], [1, 0]], [[-1, 0], [0, 1]]],
        "r": 2,
        "A": [[0, 1], [1, 1]],
        "mu": [["1/2", 0], [0, "1/3"]]
    }"#;
    let config = JobConfig { input: Input::Inline(bundle.into()), ..JobConfig::new(Command::CheckBundle) };
    let report = run(&config)?;
    println!("check-bundle pass = {}, exit code {}", report.pass, report.exit_code());
    println!("{}", &report.to_json()[..200]);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Res {
    run_example()
}
