fn main() {
    std::process::exit(frac_bernoulli::cli::main());
}
