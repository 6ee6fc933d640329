#pragma once

#define GRAYSIM_VERSION "0.1.0"
