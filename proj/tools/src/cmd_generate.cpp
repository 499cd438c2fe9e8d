#include "common.hpp"

#include "gm/error.hpp"
#include "gm/synthgen.hpp"

#include <fstream>
#include <ostream>

namespace gm::cli {

int run_generate(const GenerateOptions& opt, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        const GenSpec spec{opt.n, opt.seed, 1.0, opt.deletion_pct, parse_connectivity(opt.connectivity)};
        const auto pair = make_noisy_pair(spec);
        save_graph(pair.source, opt.out_a);
        save_graph(pair.target, opt.out_b);
        if (opt.out_truth) {
            std::ofstream os(*opt.out_truth);
            if (!os)
                throw ValidationError("cannot write " + opt.out_truth->string());
            os << serialize_matching(pair.truth) << '\n';
        }
        out << "wrote " << opt.out_a.string() << " (" << pair.source.size() << " nodes) and " << opt.out_b.string()
            << " (" << pair.target.size() << " nodes)\n";
        return int{kOk};
    });
}

} // namespace gm::cli
