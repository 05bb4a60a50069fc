# to run test coverage use
# pytest --cov=src/
