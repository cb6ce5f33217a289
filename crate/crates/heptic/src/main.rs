fn main() {
    println!("heptic CLI: subcommands arrive with the solver runtime");
}
