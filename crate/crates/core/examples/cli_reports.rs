//! Running `qperm` subcommands in-process and reading structured reports.

use quantum_permutations::cli;

fn main() {
    for args in [
        vec!["qperm", "wang", "--n", "4", "--depth", "6", "--no-timing", "--format", "json"],
        vec!["qperm", "lemma37", "--n", "3", "--no-timing"],
        vec!["qperm", "classify", "--n", "9"],
    ] {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = cli::run(args.clone(), &mut out, &mut err);
        println!("$ {} -> exit {code}", args.join(" "));
        print!("{}", String::from_utf8_lossy(&out));
        print!("{}", String::from_utf8_lossy(&err));
    }
}
