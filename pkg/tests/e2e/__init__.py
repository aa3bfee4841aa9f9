# e2e tests package
