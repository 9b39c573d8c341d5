#include "randlab/toy_machine.hpp"

#include "randlab/errors.hpp"

namespace randlab {

namespace {

struct OutOfBits {};
struct OverBudget {};
struct OutputTooLong {};

class Run {
public:
    Run(const Bits& program, unsigned long budget, std::size_t max_output)
        : prog_(program), budget_(budget), max_output_(max_output) {}

    // nullopt at end of program
    std::optional<char> read() {
        if (pos_ == prog_.size()) return std::nullopt;
        return prog_[pos_++];
    }
    char read_or_throw() {
        if (auto b = read()) return *b;
        throw OutOfBits{};
    }
    void charge(unsigned long n) {
        steps_ += n;
        if (steps_ > budget_) throw OverBudget{};
    }
    void append(const Bits& s) {
        charge(1 + s.size());
        out_ += s;
        if (out_.size() > max_output_) throw OutputTooLong{};
    }
    std::size_t consumed() const { return pos_; }
    Bits& out() { return out_; }

private:
    const Bits& prog_;
    std::size_t pos_ = 0;
    unsigned long budget_;
    unsigned long steps_ = 0;
    std::size_t max_output_;
    Bits out_;
};

Bits complement(const Bits& s) {
    Bits c = s;
    for (char& b : c) b = b == '0' ? '1' : '0';
    return c;
}

// Assembly mode. PLAIN treats a missing bit as halt; PREFIX treats it as
// "needs more input".
void run_assembly(Run& run, bool plain) {
    const auto next = [&]() -> std::optional<char> {
        if (plain) return run.read();
        return run.read_or_throw();
    };
    for (;;) {
        auto b0 = next();
        if (!b0) return;
        if (*b0 == '0') {
            auto b = next();
            if (!b) return;
            run.append(Bits(1, *b));
            continue;
        }
        auto b1 = next();
        if (!b1) return;
        if (*b1 == '0') {
            Bits copy = run.out();
            run.append(copy);
            continue;
        }
        auto b2 = next();
        if (!b2) return;
        if (*b2 == '0') {
            run.append(complement(run.out()));
            continue;
        }
        run.charge(1);  // halt
        return;
    }
}

}  // namespace

std::optional<Bits> run_toy_machine(ModelKind kind, const Bits& program, unsigned long budget,
                                    std::size_t max_output) {
    Run run(program, budget, max_output);
    try {
        run.charge(1);
        if (kind == ModelKind::Plain) {
            auto mode = run.read();
            if (mode == '0') {
                Bits rest = program.substr(1);
                run.append(rest);
            } else if (mode == '1') {
                run_assembly(run, true);
            }
            return run.out();
        }

        const char mode = run.read_or_throw();
        if (mode == '0') {
            std::size_t zeros = 0;
            while (run.read_or_throw() == '0') ++zeros;
            unsigned long v = 1;
            for (std::size_t i = 0; i < zeros; ++i) v = 2 * v + (run.read_or_throw() == '1' ? 1 : 0);
            const unsigned long n = v - 1;
            if (n > max_output) return std::nullopt;
            Bits lit;
            for (unsigned long i = 0; i < n; ++i) lit.push_back(run.read_or_throw());
            run.append(lit);
        } else {
            run_assembly(run, false);
        }
        if (run.consumed() != program.size()) return std::nullopt;
        return run.out();
    } catch (const OutOfBits&) {
        return std::nullopt;
    } catch (const OverBudget&) {
        return std::nullopt;
    } catch (const OutputTooLong&) {
        return std::nullopt;
    }
}

namespace {

template <ModelKind K>
ComplexityTable<K> enumerate(const ToyMachineConfig& cfg) {
    if (cfg.kind != K) throw InputError("toy machine config kind mismatch");
    if (cfg.max_program_length > kMaxProgramLengthCap)
        throw ResourceError("max_program_length " + std::to_string(cfg.max_program_length) +
                            " exceeds the cap of " + std::to_string(kMaxProgramLengthCap));
    if (cfg.machine_id != kToyMachineId)
        throw InputError("unknown machine id '" + cfg.machine_id + "'");

    std::map<Bits, std::optional<unsigned>> table;
    for (const auto& x : all_strings_up_to(cfg.max_output_length)) table.emplace(x, std::nullopt);

    // Programs in order of length, so the first hit for an output is minimal.
    for (unsigned len = 0; len <= cfg.max_program_length; ++len)
        for (const auto& p : all_strings(len)) {
            auto out = run_toy_machine(K, p, cfg.step_budget, cfg.max_output_length);
            if (!out) continue;
            auto& slot = table.at(*out);
            if (!slot) slot = len;
        }

    ModelHeader header{cfg.machine_id, K, cfg.max_program_length, cfg.step_budget,
                       cfg.max_output_length};
    return ComplexityTable<K>(std::move(header), std::move(table));
}

}  // namespace

PlainModel enumerate_plain(const ToyMachineConfig& cfg) { return enumerate<ModelKind::Plain>(cfg); }
PrefixModel enumerate_prefix(const ToyMachineConfig& cfg) { return enumerate<ModelKind::Prefix>(cfg); }

std::variant<PlainModel, PrefixModel> enumerate_toy_machine(const ToyMachineConfig& cfg) {
    if (cfg.kind == ModelKind::Plain) return enumerate_plain(cfg);
    return enumerate_prefix(cfg);
}

}  // namespace randlab
