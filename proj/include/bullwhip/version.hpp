#pragma once

#define BULLWHIP_VERSION_MAJOR 0
#define BULLWHIP_VERSION_MINOR 1
#define BULLWHIP_VERSION_PATCH 0
#define BULLWHIP_VERSION "0.1.0"
