#ifndef EIDEAL_VERSION_HPP
#define EIDEAL_VERSION_HPP

#define EIDEAL_VERSION "0.1.0"

#endif
