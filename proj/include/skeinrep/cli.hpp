#pragma once

namespace skeinrep {

int run_cli(int argc, char** argv);

}  // namespace skeinrep
